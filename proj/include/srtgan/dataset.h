// Copyright 2026 The SRTGAN Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRTGAN_DATASET_H_
#define SRTGAN_DATASET_H_

#include <string>
#include <vector>

#include "srtgan/image.h"

namespace srtgan {

// Paired LR/HR dataset: a directory of {id}_LR.png / {id}_HR.png files plus
// an index.txt manifest listing one identifier per line.
class PairDataset {
 public:
  static PairDataset open(const std::string& root);

  size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& root() const { return root_; }

  // Loads and validates one pair (HR exactly 4x LR).
  ImagePair load(size_t index) const;

 private:
  std::string root_;
  std::vector<std::string> ids_;
};

// Full-reference IQA corpus row.
struct QARecord {
  std::string reference_path;
  std::string distorted_path;
  double mos = 0.0;
};

// Parses a (reference_path, distorted_path, mos) CSV manifest. An optional
// header row is skipped. Relative paths resolve against the manifest's
// directory. All malformed rows are reported together, by row number.
std::vector<QARecord> load_qa_manifest(const std::string& path);

// Emits the manifest above from a KADID-10K style tree: {root}/dmos.csv
// with dist_img,ref_img,dmos columns and images under {root}/images/ (or
// directly under {root}).
void write_kadid_manifest(const std::string& kadid_root, const std::string& out_path);

}  // namespace srtgan

#endif  // SRTGAN_DATASET_H_

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

#include "srtgan/dataset.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srtgan/error.h"

namespace srtgan {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

}  // namespace

PairDataset PairDataset::open(const std::string& root) {
  PairDataset ds;
  ds.root_ = root;
  SRTGAN_CHECK(fs::is_directory(root), "PairDataset: not a directory: ", root);
  const std::string index = (fs::path(root) / "index.txt").string();
  std::ifstream in(index);
  SRTGAN_CHECK(in.good(), "PairDataset: missing index manifest: ", index);
  std::string line;
  while (std::getline(in, line)) {
    const std::string id = trim(line);
    if (!id.empty()) ds.ids_.push_back(id);
  }
  SRTGAN_CHECK(!ds.ids_.empty(), "PairDataset: empty index manifest: ", index);
  return ds;
}

ImagePair PairDataset::load(size_t index) const {
  SRTGAN_CHECK(index < ids_.size(), "PairDataset: index ", index,
               " out of range (size ", ids_.size(), ")");
  const std::string& id = ids_[index];
  ImagePair pair;
  pair.identifier = id;
  pair.scale = 4;
  pair.lr = load_image((fs::path(root_) / (id + "_LR.png")).string());
  pair.hr = load_image((fs::path(root_) / (id + "_HR.png")).string());
  check_pair(pair);
  return pair;
}

std::vector<QARecord> load_qa_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) fail_config("qa manifest: cannot open: ", path);
  const fs::path base = fs::path(path).parent_path();

  auto resolve = [&](const std::string& p) {
    return fs::path(p).is_absolute() ? p : (base / p).string();
  };

  std::vector<QARecord> records;
  std::vector<int> bad_rows;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto cells = split_csv_row(t);
    if (row == 1 && cells.size() >= 3 && cells[0] == "reference_path") continue;
    if (cells.size() != 3) {
      bad_rows.push_back(row);
      continue;
    }
    QARecord rec;
    rec.reference_path = resolve(cells[0]);
    rec.distorted_path = resolve(cells[1]);
    try {
      size_t used = 0;
      rec.mos = std::stod(cells[2], &used);
      if (used != cells[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      bad_rows.push_back(row);
      continue;
    }
    if (!(rec.mos >= 1.0 && rec.mos <= 5.0)) {
      bad_rows.push_back(row);
      continue;
    }
    records.push_back(std::move(rec));
  }
  if (!bad_rows.empty()) {
    std::string rows;
    for (size_t i = 0; i < bad_rows.size(); ++i) {
      if (i) rows += ", ";
      rows += std::to_string(bad_rows[i]);
    }
    fail_config("qa manifest: malformed rows (need reference_path,distorted_path,"
                "mos with mos in [1,5]) at row(s): ", rows, " in ", path);
  }
  if (records.empty()) fail_config("qa manifest: no records in ", path);
  return records;
}

void write_kadid_manifest(const std::string& kadid_root, const std::string& out_path) {
  const fs::path root(kadid_root);
  const std::string dmos = (root / "dmos.csv").string();
  std::ifstream in(dmos);
  if (!in.good())
    fail_config("kadid adapter: expected ", dmos,
                " with dist_img,ref_img,dmos columns");
  fs::path img_dir = root / "images";
  if (!fs::is_directory(img_dir)) img_dir = root;

  std::ofstream out(out_path);
  SRTGAN_CHECK(out.good(), "kadid adapter: cannot write: ", out_path);
  out << "reference_path,distorted_path,mos\n";
  std::string line;
  int row = 0, emitted = 0;
  while (std::getline(in, line)) {
    ++row;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto cells = split_csv_row(t);
    if (row == 1 && !cells.empty() && cells[0] == "dist_img") continue;
    if (cells.size() < 3) fail_config("kadid adapter: malformed row ", row, " in ", dmos);
    out << (img_dir / cells[1]).string() << ","
        << (img_dir / cells[0]).string() << "," << cells[2] << "\n";
    ++emitted;
  }
  SRTGAN_CHECK(emitted > 0, "kadid adapter: no rows in ", dmos);
}

}  // namespace srtgan

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

#ifndef SRTGAN_NN_AUTOGRAD_H_
#define SRTGAN_NN_AUTOGRAD_H_

#include <functional>
#include <memory>
#include <vector>

#include "srtgan/nn/tensor.h"

namespace srtgan {
namespace nn {

// Define-by-run reverse-mode autodiff. Each op returns a Node holding the
// forward value plus a closure that scatters the node's gradient into its
// parents. When gradients are globally disabled (NoGradGuard) or no input
// requires them, ops return plain value nodes and intermediates free as
// their refcounts drop.
template <typename T>
struct Node {
  Tensor<T> value;
  Tensor<T> grad;  // allocated on first use
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node<T>>> parents;
  // Called with this node once its grad is final; scatters into parents.
  std::function<void(Node<T>*)> backward_fn;

  void ensure_grad() {
    if (grad.data.empty()) {
      grad.shape = value.shape;
      grad.data.assign(value.data.size(), T(0));
    }
  }
  void zero_grad() {
    if (!grad.data.empty()) grad.fill(T(0));
  }
};

template <typename T>
using Var = std::shared_ptr<Node<T>>;

template <typename T>
Var<T> make_var(Tensor<T> value, bool requires_grad = false) {
  auto n = std::make_shared<Node<T>>();
  n->value = std::move(value);
  n->requires_grad = requires_grad;
  return n;
}

// Copy of the value with the graph cut off.
template <typename T>
Var<T> detach(const Var<T>& x) {
  return make_var<T>(x->value, false);
}

bool grad_enabled();

class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// Propagates d(root)/d(leaf) into every reachable node that requires a
// gradient. root must be a scalar (numel == 1) and must itself require a
// gradient; a root built under NoGradGuard is an error, not a no-op.
// Gradients accumulate, so call zero_grad on parameters between steps.
template <typename T>
void backward(const Var<T>& root);

extern template void backward<float>(const Var<float>&);
extern template void backward<double>(const Var<double>&);

}  // namespace nn
}  // namespace srtgan

#endif  // SRTGAN_NN_AUTOGRAD_H_

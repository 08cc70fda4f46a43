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

#include "srtgan/nn/ops.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "srtgan/error.h"

namespace srtgan {
namespace nn {

namespace {

template <typename T>
using RowMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using MatMap = Eigen::Map<RowMat<T>>;
template <typename T>
using ConstMatMap = Eigen::Map<const RowMat<T>>;

template <typename T>
void check_same_shape(const Var<T>& a, const Var<T>& b, const char* op) {
  SRTGAN_CHECK(a->value.same_shape(b->value), op, ": shape mismatch ",
               a->value.shape_str(), " vs ", b->value.shape_str());
}

// Wires parents/backward_fn when gradients are live. `bw` runs with output
// grad already populated.
template <typename T, typename F>
Var<T> attach(Tensor<T> value, std::vector<Var<T>> parents, F&& bw) {
  auto out = make_var(std::move(value));
  bool needs = false;
  if (grad_enabled()) {
    for (const auto& p : parents) needs = needs || p->requires_grad;
  }
  if (needs) {
    out->requires_grad = true;
    out->parents = std::move(parents);
    out->backward_fn = std::forward<F>(bw);
  }
  return out;
}

// im2col: src [C,H,W] -> col [C*K*K, OH*OW], zero padded.
template <typename T>
void im2col(const T* src, int C, int H, int W, int K, int stride, int pad,
            int OH, int OW, T* col) {
  const int64_t ohw = int64_t(OH) * OW;
  T* cp = col;
  for (int c = 0; c < C; ++c) {
    const T* plane = src + int64_t(c) * H * W;
    for (int ky = 0; ky < K; ++ky) {
      for (int kx = 0; kx < K; ++kx) {
        for (int oy = 0; oy < OH; ++oy) {
          const int iy = oy * stride - pad + ky;
          T* row = cp + int64_t(oy) * OW;
          if (iy < 0 || iy >= H) {
            std::fill(row, row + OW, T(0));
            continue;
          }
          const T* srow = plane + int64_t(iy) * W;
          for (int ox = 0; ox < OW; ++ox) {
            const int ix = ox * stride - pad + kx;
            row[ox] = (ix >= 0 && ix < W) ? srow[ix] : T(0);
          }
        }
        cp += ohw;
      }
    }
  }
}

// Adjoint of im2col: scatters col [C*K*K, OH*OW] back into dst [C,H,W],
// accumulating overlaps.
template <typename T>
void col2im_accum(const T* col, int C, int H, int W, int K, int stride, int pad,
                  int OH, int OW, T* dst) {
  const int64_t ohw = int64_t(OH) * OW;
  const T* cp = col;
  for (int c = 0; c < C; ++c) {
    T* plane = dst + int64_t(c) * H * W;
    for (int ky = 0; ky < K; ++ky) {
      for (int kx = 0; kx < K; ++kx) {
        for (int oy = 0; oy < OH; ++oy) {
          const int iy = oy * stride - pad + ky;
          if (iy < 0 || iy >= H) continue;
          const T* row = cp + int64_t(oy) * OW;
          T* drow = plane + int64_t(iy) * W;
          for (int ox = 0; ox < OW; ++ox) {
            const int ix = ox * stride - pad + kx;
            if (ix >= 0 && ix < W) drow[ix] += row[ox];
          }
        }
        cp += ohw;
      }
    }
  }
}

}  // namespace

template <typename T>
Var<T> add(const Var<T>& a, const Var<T>& b) {
  check_same_shape(a, b, "add");
  Tensor<T> out(a->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i)
    out.data[i] = a->value.data[i] + b->value.data[i];
  return attach<T>(std::move(out), {a, b}, [a = a.get(), b = b.get()](Node<T>* o) {
    if (a->requires_grad) {
      a->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i) a->grad.data[i] += o->grad.data[i];
    }
    if (b->requires_grad) {
      b->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i) b->grad.data[i] += o->grad.data[i];
    }
  });
}

template <typename T>
Var<T> sub(const Var<T>& a, const Var<T>& b) {
  check_same_shape(a, b, "sub");
  Tensor<T> out(a->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i)
    out.data[i] = a->value.data[i] - b->value.data[i];
  return attach<T>(std::move(out), {a, b}, [a = a.get(), b = b.get()](Node<T>* o) {
    if (a->requires_grad) {
      a->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i) a->grad.data[i] += o->grad.data[i];
    }
    if (b->requires_grad) {
      b->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i) b->grad.data[i] -= o->grad.data[i];
    }
  });
}

template <typename T>
Var<T> mul(const Var<T>& a, const Var<T>& b) {
  check_same_shape(a, b, "mul");
  Tensor<T> out(a->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i)
    out.data[i] = a->value.data[i] * b->value.data[i];
  return attach<T>(std::move(out), {a, b}, [a = a.get(), b = b.get()](Node<T>* o) {
    if (a->requires_grad) {
      a->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i)
        a->grad.data[i] += o->grad.data[i] * b->value.data[i];
    }
    if (b->requires_grad) {
      b->ensure_grad();
      for (int64_t i = 0; i < o->grad.numel(); ++i)
        b->grad.data[i] += o->grad.data[i] * a->value.data[i];
    }
  });
}

template <typename T>
Var<T> affine(const Var<T>& x, T scale, T shift) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i)
    out.data[i] = scale * x->value.data[i] + shift;
  return attach<T>(std::move(out), {x}, [x = x.get(), scale](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i)
      x->grad.data[i] += scale * o->grad.data[i];
  });
}

template <typename T>
Var<T> abs_val(const Var<T>& x) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i) out.data[i] = std::abs(x->value.data[i]);
  return attach<T>(std::move(out), {x}, [x = x.get()](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i) {
      const T v = x->value.data[i];
      const T s = v > T(0) ? T(1) : (v < T(0) ? T(-1) : T(0));
      x->grad.data[i] += s * o->grad.data[i];
    }
  });
}

template <typename T>
Var<T> square(const Var<T>& x) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i) {
    const T v = x->value.data[i];
    out.data[i] = v * v;
  }
  return attach<T>(std::move(out), {x}, [x = x.get()](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i)
      x->grad.data[i] += T(2) * x->value.data[i] * o->grad.data[i];
  });
}

template <typename T>
Var<T> relu(const Var<T>& x) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i)
    out.data[i] = x->value.data[i] > T(0) ? x->value.data[i] : T(0);
  return attach<T>(std::move(out), {x}, [x = x.get()](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i)
      if (x->value.data[i] > T(0)) x->grad.data[i] += o->grad.data[i];
  });
}

template <typename T>
Var<T> leaky_relu(const Var<T>& x, T slope) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i) {
    const T v = x->value.data[i];
    out.data[i] = v > T(0) ? v : slope * v;
  }
  return attach<T>(std::move(out), {x}, [x = x.get(), slope](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i) {
      const T g = x->value.data[i] > T(0) ? T(1) : slope;
      x->grad.data[i] += g * o->grad.data[i];
    }
  });
}

template <typename T>
Var<T> sigmoid(const Var<T>& x) {
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i) {
    const T v = x->value.data[i];
    // Split by sign for numeric stability at large |v|.
    out.data[i] = v >= T(0) ? T(1) / (T(1) + std::exp(-v))
                            : std::exp(v) / (T(1) + std::exp(v));
  }
  return attach<T>(std::move(out), {x}, [x = x.get()](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i) {
      const T y = o->value.data[i];
      x->grad.data[i] += y * (T(1) - y) * o->grad.data[i];
    }
  });
}

template <typename T>
Var<T> mean_all(const Var<T>& x) {
  const int64_t n = x->value.numel();
  SRTGAN_CHECK(n > 0, "mean_all: empty tensor");
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) acc += double(x->value.data[i]);
  Tensor<T> out({1});
  out.data[0] = T(acc / double(n));
  return attach<T>(std::move(out), {x}, [x = x.get(), n](Node<T>* o) {
    x->ensure_grad();
    const T g = o->grad.data[0] / T(n);
    for (int64_t i = 0; i < n; ++i) x->grad.data[i] += g;
  });
}

template <typename T>
Var<T> weighted_sum(const std::vector<Var<T>>& xs, const std::vector<T>& coeffs) {
  SRTGAN_CHECK(!xs.empty() && xs.size() == coeffs.size(),
               "weighted_sum: need matching non-empty terms, got ", xs.size(),
               " terms and ", coeffs.size(), " coefficients");
  double acc = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    SRTGAN_CHECK(xs[i]->value.numel() == 1, "weighted_sum: term ", i,
                 " is not scalar, shape ", xs[i]->value.shape_str());
    acc += double(coeffs[i]) * double(xs[i]->value.data[0]);
  }
  Tensor<T> out({1});
  out.data[0] = T(acc);
  std::vector<Var<T>> parents(xs.begin(), xs.end());
  return attach<T>(std::move(out), std::move(parents),
                   [coeffs](Node<T>* o) {
                     for (size_t i = 0; i < o->parents.size(); ++i) {
                       Node<T>* p = o->parents[i].get();
                       if (!p->requires_grad) continue;
                       p->ensure_grad();
                       p->grad.data[0] += coeffs[i] * o->grad.data[0];
                     }
                   });
}

template <typename T>
Var<T> reshape(const Var<T>& x, std::vector<int> shape) {
  SRTGAN_CHECK(Tensor<T>::numel_of(shape) == x->value.numel(),
               "reshape: cannot view ", x->value.shape_str(), " as ",
               Tensor<T>::shape_str_of(shape));
  Tensor<T> out(shape);
  out.data = x->value.data;
  return attach<T>(std::move(out), {x}, [x = x.get()](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i) x->grad.data[i] += o->grad.data[i];
  });
}

template <typename T>
Var<T> conv2d(const Var<T>& x, const Var<T>& weight, const Var<T>& bias,
              int stride, int pad) {
  SRTGAN_CHECK(x->value.ndim() == 4, "conv2d: input must be NCHW, got ",
               x->value.shape_str());
  SRTGAN_CHECK(weight->value.ndim() == 4, "conv2d: weight must be [OC,IC,K,K], got ",
               weight->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int H = x->value.shape[2], W = x->value.shape[3];
  const int OC = weight->value.shape[0], K = weight->value.shape[2];
  SRTGAN_CHECK(weight->value.shape[1] == C, "conv2d: weight expects ",
               weight->value.shape[1], " input channels, input has ", C);
  SRTGAN_CHECK(weight->value.shape[3] == K, "conv2d: kernel must be square, got ",
               weight->value.shape_str());
  SRTGAN_CHECK(bias->value.ndim() == 1 && bias->value.shape[0] == OC,
               "conv2d: bias must be [", OC, "], got ", bias->value.shape_str());
  SRTGAN_CHECK(stride >= 1 && pad >= 0, "conv2d: bad stride/pad ", stride, "/", pad);
  const int OH = conv_out_size(H, K, stride, pad);
  const int OW = conv_out_size(W, K, stride, pad);
  SRTGAN_CHECK(OH >= 1 && OW >= 1, "conv2d: input ", H, "x", W,
               " too small for kernel ", K, " stride ", stride, " pad ", pad);

  const int64_t ckk = int64_t(C) * K * K;
  const int64_t ohw = int64_t(OH) * OW;
  Tensor<T> out({N, OC, OH, OW});
  std::vector<T> col(size_t(ckk * ohw));
  ConstMatMap<T> wm(weight->value.data.data(), OC, ckk);
  for (int n = 0; n < N; ++n) {
    im2col(x->value.data.data() + int64_t(n) * C * H * W, C, H, W, K, stride, pad,
           OH, OW, col.data());
    ConstMatMap<T> cm(col.data(), ckk, ohw);
    MatMap<T> om(out.data.data() + int64_t(n) * OC * ohw, OC, ohw);
    om.noalias() = wm * cm;
    for (int oc = 0; oc < OC; ++oc)
      om.row(oc).array() += bias->value.data[oc];
  }

  auto bw = [x = x.get(), w = weight.get(), b = bias.get(), N, C, H, W, OC, K,
             stride, pad, OH, OW, ckk, ohw](Node<T>* o) {
    std::vector<T> col(size_t(ckk * ohw));
    const bool need_x = x->requires_grad;
    const bool need_w = w->requires_grad;
    const bool need_b = b->requires_grad;
    if (need_x) x->ensure_grad();
    if (need_w) w->ensure_grad();
    if (need_b) b->ensure_grad();
    ConstMatMap<T> wm(w->value.data.data(), OC, ckk);
    std::vector<T> dcol(need_x ? size_t(ckk * ohw) : 0);
    for (int n = 0; n < N; ++n) {
      ConstMatMap<T> go(o->grad.data.data() + int64_t(n) * OC * ohw, OC, ohw);
      if (need_b) {
        for (int oc = 0; oc < OC; ++oc) b->grad.data[oc] += go.row(oc).sum();
      }
      if (need_w) {
        im2col(x->value.data.data() + int64_t(n) * C * H * W, C, H, W, K, stride,
               pad, OH, OW, col.data());
        ConstMatMap<T> cm(col.data(), ckk, ohw);
        MatMap<T> dwm(w->grad.data.data(), OC, ckk);
        dwm.noalias() += go * cm.transpose();
      }
      if (need_x) {
        MatMap<T> dcm(dcol.data(), ckk, ohw);
        dcm.noalias() = wm.transpose() * go;
        col2im_accum(dcol.data(), C, H, W, K, stride, pad, OH, OW,
                     x->grad.data.data() + int64_t(n) * C * H * W);
      }
    }
  };
  return attach<T>(std::move(out), {x, weight, bias}, std::move(bw));
}

template <typename T>
Var<T> linear(const Var<T>& x, const Var<T>& weight, const Var<T>& bias) {
  SRTGAN_CHECK(x->value.ndim() == 2, "linear: input must be [N,K], got ",
               x->value.shape_str());
  const int N = x->value.shape[0], K = x->value.shape[1];
  SRTGAN_CHECK(weight->value.ndim() == 2 && weight->value.shape[1] == K,
               "linear: weight must be [M,", K, "], got ", weight->value.shape_str());
  const int M = weight->value.shape[0];
  SRTGAN_CHECK(bias->value.ndim() == 1 && bias->value.shape[0] == M,
               "linear: bias must be [", M, "], got ", bias->value.shape_str());
  Tensor<T> out({N, M});
  ConstMatMap<T> xm(x->value.data.data(), N, K);
  ConstMatMap<T> wm(weight->value.data.data(), M, K);
  MatMap<T> om(out.data.data(), N, M);
  om.noalias() = xm * wm.transpose();
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < M; ++m) om(n, m) += bias->value.data[m];

  auto bw = [x = x.get(), w = weight.get(), b = bias.get(), N, K, M](Node<T>* o) {
    ConstMatMap<T> go(o->grad.data.data(), N, M);
    if (x->requires_grad) {
      x->ensure_grad();
      MatMap<T> dx(x->grad.data.data(), N, K);
      ConstMatMap<T> wm(w->value.data.data(), M, K);
      dx.noalias() += go * wm;
    }
    if (w->requires_grad) {
      w->ensure_grad();
      MatMap<T> dw(w->grad.data.data(), M, K);
      ConstMatMap<T> xm(x->value.data.data(), N, K);
      dw.noalias() += go.transpose() * xm;
    }
    if (b->requires_grad) {
      b->ensure_grad();
      for (int m = 0; m < M; ++m) b->grad.data[m] += go.col(m).sum();
    }
  };
  return attach<T>(std::move(out), {x, weight, bias}, std::move(bw));
}

template <typename T>
Var<T> batch_norm2d(const Var<T>& x, const Var<T>& gamma, const Var<T>& beta,
                    Tensor<T>* running_mean, Tensor<T>* running_var,
                    bool training, bool update_running, T momentum, T eps) {
  SRTGAN_CHECK(x->value.ndim() == 4, "batch_norm2d: input must be NCHW, got ",
               x->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int H = x->value.shape[2], W = x->value.shape[3];
  SRTGAN_CHECK(gamma->value.numel() == C && beta->value.numel() == C,
               "batch_norm2d: gamma/beta must have ", C, " entries");
  SRTGAN_CHECK(running_mean && running_var && running_mean->numel() == C &&
                   running_var->numel() == C,
               "batch_norm2d: running stats must have ", C, " entries");
  const int64_t plane = int64_t(H) * W;
  const int64_t m = int64_t(N) * plane;

  std::vector<T> mean(C), inv_std(C);
  if (training) {
    SRTGAN_CHECK(m > 1, "batch_norm2d: batch statistics need more than one "
                        "value per channel, got N*H*W=", m);
    for (int c = 0; c < C; ++c) {
      double s = 0.0;
      for (int n = 0; n < N; ++n) {
        const T* p = x->value.data.data() + (int64_t(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) s += double(p[i]);
      }
      const double mu = s / double(m);
      double v = 0.0;
      for (int n = 0; n < N; ++n) {
        const T* p = x->value.data.data() + (int64_t(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) {
          const double d = double(p[i]) - mu;
          v += d * d;
        }
      }
      const double var = v / double(m);
      mean[c] = T(mu);
      inv_std[c] = T(1.0 / std::sqrt(var + double(eps)));
      if (update_running) {
        const double unbiased = v / double(m - 1);
        running_mean->data[c] =
            T((1.0 - double(momentum)) * double(running_mean->data[c]) +
              double(momentum) * mu);
        running_var->data[c] =
            T((1.0 - double(momentum)) * double(running_var->data[c]) +
              double(momentum) * unbiased);
      }
    }
  } else {
    for (int c = 0; c < C; ++c) {
      mean[c] = running_mean->data[c];
      inv_std[c] = T(1.0 / std::sqrt(double(running_var->data[c]) + double(eps)));
    }
  }

  // xhat is kept for the backward pass in both modes.
  auto xhat = std::make_shared<Tensor<T>>(x->value.shape);
  Tensor<T> out(x->value.shape);
  for (int n = 0; n < N; ++n) {
    for (int c = 0; c < C; ++c) {
      const int64_t base = (int64_t(n) * C + c) * plane;
      const T mu = mean[c], is = inv_std[c];
      const T g = gamma->value.data[c], bta = beta->value.data[c];
      for (int64_t i = 0; i < plane; ++i) {
        const T xh = (x->value.data[base + i] - mu) * is;
        xhat->data[base + i] = xh;
        out.data[base + i] = g * xh + bta;
      }
    }
  }

  auto bw = [x = x.get(), gm = gamma.get(), bt = beta.get(), xhat,
             inv_std = std::move(inv_std), training, N, C, plane, m](Node<T>* o) {
    for (int c = 0; c < C; ++c) {
      // Channel-wise sums of upstream grad and grad*xhat.
      double sum_go = 0.0, sum_go_xh = 0.0;
      for (int n = 0; n < N; ++n) {
        const int64_t base = (int64_t(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) {
          const double g = double(o->grad.data[base + i]);
          sum_go += g;
          sum_go_xh += g * double(xhat->data[base + i]);
        }
      }
      if (gm->requires_grad) {
        gm->ensure_grad();
        gm->grad.data[c] += T(sum_go_xh);
      }
      if (bt->requires_grad) {
        bt->ensure_grad();
        bt->grad.data[c] += T(sum_go);
      }
      if (!x->requires_grad) continue;
      x->ensure_grad();
      const T g = gm->value.data[c], is = inv_std[c];
      if (training) {
        const T k1 = T(sum_go / double(m));
        const T k2 = T(sum_go_xh / double(m));
        for (int n = 0; n < N; ++n) {
          const int64_t base = (int64_t(n) * C + c) * plane;
          for (int64_t i = 0; i < plane; ++i) {
            const T go = o->grad.data[base + i];
            const T xh = xhat->data[base + i];
            x->grad.data[base + i] += g * is * (go - k1 - xh * k2);
          }
        }
      } else {
        for (int n = 0; n < N; ++n) {
          const int64_t base = (int64_t(n) * C + c) * plane;
          for (int64_t i = 0; i < plane; ++i)
            x->grad.data[base + i] += g * is * o->grad.data[base + i];
        }
      }
    }
  };
  return attach<T>(std::move(out), {x, gamma, beta}, std::move(bw));
}

template <typename T>
Var<T> maxpool2x2(const Var<T>& x) {
  SRTGAN_CHECK(x->value.ndim() == 4, "maxpool2x2: input must be NCHW, got ",
               x->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int H = x->value.shape[2], W = x->value.shape[3];
  SRTGAN_CHECK(H >= 2 && W >= 2, "maxpool2x2: input ", H, "x", W, " too small");
  const int OH = H / 2, OW = W / 2;
  Tensor<T> out({N, C, OH, OW});
  auto argmax = std::make_shared<std::vector<int64_t>>(size_t(out.numel()));
  int64_t oi = 0;
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c) {
      const int64_t base = (int64_t(n) * C + c) * H * W;
      for (int oy = 0; oy < OH; ++oy)
        for (int ox = 0; ox < OW; ++ox, ++oi) {
          int64_t best = base + int64_t(2 * oy) * W + 2 * ox;
          T bv = x->value.data[best];
          for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
              const int64_t idx = base + int64_t(2 * oy + dy) * W + 2 * ox + dx;
              if (x->value.data[idx] > bv) {
                bv = x->value.data[idx];
                best = idx;
              }
            }
          out.data[oi] = bv;
          (*argmax)[size_t(oi)] = best;
        }
    }
  return attach<T>(std::move(out), {x}, [x = x.get(), argmax](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i)
      x->grad.data[(*argmax)[size_t(i)]] += o->grad.data[i];
  });
}

template <typename T>
Var<T> nearest_upsample2x(const Var<T>& x) {
  SRTGAN_CHECK(x->value.ndim() == 4, "nearest_upsample2x: input must be NCHW, got ",
               x->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int H = x->value.shape[2], W = x->value.shape[3];
  Tensor<T> out({N, C, 2 * H, 2 * W});
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c) {
      const int64_t ib = (int64_t(n) * C + c) * H * W;
      const int64_t ob = (int64_t(n) * C + c) * 4 * H * W;
      for (int y = 0; y < H; ++y)
        for (int xx = 0; xx < W; ++xx) {
          const T v = x->value.data[ib + int64_t(y) * W + xx];
          const int64_t o0 = ob + int64_t(2 * y) * 2 * W + 2 * xx;
          out.data[o0] = v;
          out.data[o0 + 1] = v;
          out.data[o0 + 2 * W] = v;
          out.data[o0 + 2 * W + 1] = v;
        }
    }
  return attach<T>(std::move(out), {x}, [x = x.get(), N, C, H, W](Node<T>* o) {
    x->ensure_grad();
    for (int n = 0; n < N; ++n)
      for (int c = 0; c < C; ++c) {
        const int64_t ib = (int64_t(n) * C + c) * H * W;
        const int64_t ob = (int64_t(n) * C + c) * 4 * H * W;
        for (int y = 0; y < H; ++y)
          for (int xx = 0; xx < W; ++xx) {
            const int64_t o0 = ob + int64_t(2 * y) * 2 * W + 2 * xx;
            x->grad.data[ib + int64_t(y) * W + xx] +=
                o->grad.data[o0] + o->grad.data[o0 + 1] +
                o->grad.data[o0 + 2 * W] + o->grad.data[o0 + 2 * W + 1];
          }
      }
  });
}

template <typename T>
Var<T> global_avg_pool(const Var<T>& x) {
  SRTGAN_CHECK(x->value.ndim() == 4, "global_avg_pool: input must be NCHW, got ",
               x->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int64_t plane = int64_t(x->value.shape[2]) * x->value.shape[3];
  Tensor<T> out({N, C, 1, 1});
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c) {
      const T* p = x->value.data.data() + (int64_t(n) * C + c) * plane;
      double s = 0.0;
      for (int64_t i = 0; i < plane; ++i) s += double(p[i]);
      out.data[int64_t(n) * C + c] = T(s / double(plane));
    }
  return attach<T>(std::move(out), {x}, [x = x.get(), N, C, plane](Node<T>* o) {
    x->ensure_grad();
    for (int n = 0; n < N; ++n)
      for (int c = 0; c < C; ++c) {
        const T g = o->grad.data[int64_t(n) * C + c] / T(plane);
        T* p = x->grad.data.data() + (int64_t(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) p[i] += g;
      }
  });
}

template <typename T>
Var<T> scale_channels(const Var<T>& x, const Var<T>& gate) {
  SRTGAN_CHECK(x->value.ndim() == 4, "scale_channels: input must be NCHW, got ",
               x->value.shape_str());
  const int N = x->value.shape[0], C = x->value.shape[1];
  SRTGAN_CHECK(gate->value.ndim() == 4 && gate->value.shape[0] == N &&
                   gate->value.shape[1] == C && gate->value.shape[2] == 1 &&
                   gate->value.shape[3] == 1,
               "scale_channels: gate must be [", N, ",", C, ",1,1], got ",
               gate->value.shape_str());
  const int64_t plane = int64_t(x->value.shape[2]) * x->value.shape[3];
  Tensor<T> out(x->value.shape);
  for (int n = 0; n < N; ++n)
    for (int c = 0; c < C; ++c) {
      const T g = gate->value.data[int64_t(n) * C + c];
      const int64_t base = (int64_t(n) * C + c) * plane;
      for (int64_t i = 0; i < plane; ++i)
        out.data[base + i] = g * x->value.data[base + i];
    }
  return attach<T>(std::move(out), {x, gate},
                   [x = x.get(), gt = gate.get(), N, C, plane](Node<T>* o) {
                     for (int n = 0; n < N; ++n)
                       for (int c = 0; c < C; ++c) {
                         const int64_t base = (int64_t(n) * C + c) * plane;
                         const T g = gt->value.data[int64_t(n) * C + c];
                         if (x->requires_grad) {
                           x->ensure_grad();
                           for (int64_t i = 0; i < plane; ++i)
                             x->grad.data[base + i] += g * o->grad.data[base + i];
                         }
                         if (gt->requires_grad) {
                           gt->ensure_grad();
                           double s = 0.0;
                           for (int64_t i = 0; i < plane; ++i)
                             s += double(o->grad.data[base + i]) *
                                  double(x->value.data[base + i]);
                           gt->grad.data[int64_t(n) * C + c] += T(s);
                         }
                       }
                   });
}

template <typename T>
Var<T> channel_l2_normalize(const Var<T>& x, T eps) {
  SRTGAN_CHECK(x->value.ndim() == 4, "channel_l2_normalize: input must be NCHW, "
               "got ", x->value.shape_str());
  SRTGAN_CHECK(eps > T(0), "channel_l2_normalize: eps must be positive");
  const int N = x->value.shape[0], C = x->value.shape[1];
  const int H = x->value.shape[2], W = x->value.shape[3];
  const int64_t plane = int64_t(H) * W;
  Tensor<T> out(x->value.shape);
  auto denom = std::make_shared<std::vector<T>>(size_t(int64_t(N) * plane));
  for (int n = 0; n < N; ++n)
    for (int64_t i = 0; i < plane; ++i) {
      double s = 0.0;
      for (int c = 0; c < C; ++c) {
        const double v = double(x->value.data[(int64_t(n) * C + c) * plane + i]);
        s += v * v;
      }
      const T d = T(std::sqrt(s + double(eps)));
      (*denom)[size_t(int64_t(n) * plane + i)] = d;
      for (int c = 0; c < C; ++c) {
        const int64_t idx = (int64_t(n) * C + c) * plane + i;
        out.data[idx] = x->value.data[idx] / d;
      }
    }
  return attach<T>(std::move(out), {x},
                   [x = x.get(), denom, N, C, plane](Node<T>* o) {
                     x->ensure_grad();
                     for (int n = 0; n < N; ++n)
                       for (int64_t i = 0; i < plane; ++i) {
                         const T d = (*denom)[size_t(int64_t(n) * plane + i)];
                         double dot = 0.0;
                         for (int c = 0; c < C; ++c) {
                           const int64_t idx = (int64_t(n) * C + c) * plane + i;
                           dot += double(o->grad.data[idx]) * double(x->value.data[idx]);
                         }
                         const T k = T(dot) / (d * d * d);
                         for (int c = 0; c < C; ++c) {
                           const int64_t idx = (int64_t(n) * C + c) * plane + i;
                           x->grad.data[idx] += o->grad.data[idx] / d -
                                                x->value.data[idx] * k;
                         }
                       }
                   });
}

template <typename T>
Var<T> dropout(const Var<T>& x, T rate, Rng& rng, bool training) {
  SRTGAN_CHECK(rate >= T(0) && rate < T(1), "dropout: rate must be in [0,1), got ",
               rate);
  if (!training || rate == T(0)) return x;
  const T keep = T(1) - rate;
  const T scale = T(1) / keep;
  auto mask = std::make_shared<std::vector<T>>(size_t(x->value.numel()));
  Tensor<T> out(x->value.shape);
  for (int64_t i = 0; i < out.numel(); ++i) {
    const T m = rng.uniform() < double(rate) ? T(0) : scale;
    (*mask)[size_t(i)] = m;
    out.data[i] = m * x->value.data[i];
  }
  return attach<T>(std::move(out), {x}, [x = x.get(), mask](Node<T>* o) {
    x->ensure_grad();
    for (int64_t i = 0; i < o->grad.numel(); ++i)
      x->grad.data[i] += (*mask)[size_t(i)] * o->grad.data[i];
  });
}

#define SRTGAN_NN_INSTANTIATE_OPS(T)                                              \
  template Var<T> add(const Var<T>&, const Var<T>&);                              \
  template Var<T> sub(const Var<T>&, const Var<T>&);                              \
  template Var<T> mul(const Var<T>&, const Var<T>&);                              \
  template Var<T> affine(const Var<T>&, T, T);                                    \
  template Var<T> abs_val(const Var<T>&);                                         \
  template Var<T> square(const Var<T>&);                                          \
  template Var<T> relu(const Var<T>&);                                            \
  template Var<T> leaky_relu(const Var<T>&, T);                                   \
  template Var<T> sigmoid(const Var<T>&);                                         \
  template Var<T> mean_all(const Var<T>&);                                        \
  template Var<T> weighted_sum(const std::vector<Var<T>>&, const std::vector<T>&); \
  template Var<T> reshape(const Var<T>&, std::vector<int>);                       \
  template Var<T> conv2d(const Var<T>&, const Var<T>&, const Var<T>&, int, int);  \
  template Var<T> linear(const Var<T>&, const Var<T>&, const Var<T>&);            \
  template Var<T> batch_norm2d(const Var<T>&, const Var<T>&, const Var<T>&,       \
                               Tensor<T>*, Tensor<T>*, bool, bool, T, T);         \
  template Var<T> maxpool2x2(const Var<T>&);                                      \
  template Var<T> nearest_upsample2x(const Var<T>&);                              \
  template Var<T> global_avg_pool(const Var<T>&);                                 \
  template Var<T> scale_channels(const Var<T>&, const Var<T>&);                   \
  template Var<T> channel_l2_normalize(const Var<T>&, T);                         \
  template Var<T> dropout(const Var<T>&, T, Rng&, bool);

SRTGAN_NN_INSTANTIATE_OPS(float)
SRTGAN_NN_INSTANTIATE_OPS(double)
#undef SRTGAN_NN_INSTANTIATE_OPS

}  // namespace nn
}  // namespace srtgan

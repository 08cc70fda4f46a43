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

#include "srtgan/losses.h"

#include <cmath>

#include "srtgan/error.h"

namespace srtgan {

using nn::Var;

namespace {

template <typename T>
void check_same_shape(const Var<T>& a, const Var<T>& b, const char* what) {
  SRTGAN_CHECK(a->value.same_shape(b->value), what, ": shapes differ, ",
               a->value.shape_str(), " vs ", b->value.shape_str());
}

template <typename T>
Var<T> mse(const Var<T>& a, const Var<T>& b) {
  return nn::mean_all(nn::square(nn::sub(a, b)));
}

template <typename T>
void check_triplet(const TripletBatch<T>& t) {
  check_same_shape(t.anchor, t.positive, "triplet");
  check_same_shape(t.anchor, t.negative, "triplet");
}

template <typename T>
void check_component(const Var<T>& v, const char* name, const char* what) {
  SRTGAN_CHECK(v->value.numel() == 1, what, ": component '", name,
               "' must be scalar, got ", v->value.shape_str());
  SRTGAN_CHECK(std::isfinite(double(v->value.data[0])), what, ": component '",
               name, "' is non-finite");
}

}  // namespace

template <typename T>
Var<T> content_loss(const Var<T>& sr, const Var<T>& hr) {
  check_same_shape(sr, hr, "content_loss");
  return nn::mean_all(nn::abs_val(nn::sub(sr, hr)));
}

template <typename T>
Var<T> perceptual_loss(const VggExtractor<T>& extractor, const Var<T>& sr,
                       const Var<T>& hr) {
  check_same_shape(sr, hr, "perceptual_loss");
  const auto f_sr = extractor.forward(sr);
  const auto f_hr = extractor.forward(hr);
  std::vector<Var<T>> terms;
  std::vector<T> coeffs;
  for (size_t i = 0; i < f_sr.size(); ++i) {
    terms.push_back(mse(nn::channel_l2_normalize(f_sr[i], T(1e-10)),
                        nn::channel_l2_normalize(f_hr[i], T(1e-10))));
    coeffs.push_back(T(1));
  }
  return nn::weighted_sum(terms, coeffs);
}

template <typename T>
Var<T> qa_loss_from_scores(const Var<T>& scores, T best) {
  SRTGAN_CHECK(scores->value.ndim() == 2 && scores->value.shape[1] == 1,
               "qa_loss: expected scores [N,1], got ",
               scores->value.shape_str());
  return nn::mean_all(nn::affine(scores, T(-1), best));
}

template <typename T>
Var<T> qa_loss(QANetwork<T>& qa, const Var<T>& sr, const Var<T>& hr) {
  return qa_loss_from_scores(qa.forward(sr, hr), T(qa.config().score_max));
}

template <typename T>
Var<T> gan_loss_generator_from_maps(const Var<T>& d_sr, const Var<T>& d_hr,
                                    const Var<T>& d_neg) {
  check_same_shape(d_sr, d_hr, "gan_loss");
  check_same_shape(d_sr, d_neg, "gan_loss");
  auto pull = mse(d_sr, d_hr);
  auto push = mse(d_sr, d_neg);
  return nn::affine(nn::weighted_sum<T>({pull, push}, {T(1), T(-1)}), T(1), T(1));
}

template <typename T>
Var<T> gan_loss_discriminator_from_maps(const Var<T>& d_sr, const Var<T>& d_hr,
                                        const Var<T>& d_neg) {
  // Positive and negative interchange relative to the generator objective.
  return gan_loss_generator_from_maps(d_sr, d_neg, d_hr);
}

template <typename T>
Var<T> gan_loss_generator(Discriminator<T>& d, const TripletBatch<T>& t,
                          bool training) {
  check_triplet(t);
  return gan_loss_generator_from_maps(d.forward(t.anchor, training),
                                      d.forward(t.positive, training),
                                      d.forward(t.negative, training));
}

template <typename T>
Var<T> gan_loss_discriminator(Discriminator<T>& d, const TripletBatch<T>& t,
                              bool training, bool update_running) {
  check_triplet(t);
  return gan_loss_discriminator_from_maps(
      d.forward(t.anchor, training, update_running),
      d.forward(t.positive, training, update_running),
      d.forward(t.negative, training, update_running));
}

template <typename T>
Var<T> vanilla_gan_loss_generator_from_maps(const Var<T>& d_sr) {
  return nn::mean_all(nn::square(nn::affine(d_sr, T(1), T(-1))));
}

template <typename T>
Var<T> vanilla_gan_loss_discriminator_from_maps(const Var<T>& d_sr,
                                                const Var<T>& d_hr) {
  check_same_shape(d_sr, d_hr, "vanilla_gan_loss");
  auto real = nn::mean_all(nn::square(nn::affine(d_hr, T(1), T(-1))));
  auto fake = nn::mean_all(nn::square(d_sr));
  return nn::weighted_sum<T>({real, fake}, {T(0.5), T(0.5)});
}

template <typename T>
Var<T> vanilla_gan_loss_generator(Discriminator<T>& d, const TripletBatch<T>& t,
                                  bool training) {
  check_triplet(t);
  return vanilla_gan_loss_generator_from_maps(d.forward(t.anchor, training));
}

template <typename T>
Var<T> vanilla_gan_loss_discriminator(Discriminator<T>& d,
                                      const TripletBatch<T>& t, bool training,
                                      bool update_running) {
  check_triplet(t);
  return vanilla_gan_loss_discriminator_from_maps(
      d.forward(t.anchor, training, update_running),
      d.forward(t.positive, training, update_running));
}

template <typename T>
Var<T> fused_generator_loss(const LossWeights& w, const Var<T>& content,
                            const Var<T>& qa, const Var<T>& gan_g,
                            const Var<T>& perceptual) {
  SRTGAN_CHECK(w.content >= 0 && w.qa >= 0 && w.gan >= 0 && w.perceptual >= 0,
               "fused generator loss: negative weight");
  check_component(content, "content", "fused generator loss");
  check_component(qa, "qa", "fused generator loss");
  check_component(gan_g, "gan", "fused generator loss");
  check_component(perceptual, "perceptual", "fused generator loss");
  return nn::weighted_sum<T>(
      {content, qa, gan_g, perceptual},
      {T(w.content), T(w.qa), T(w.gan), T(w.perceptual)});
}

template <typename T>
Var<T> fused_discriminator_loss(const LossWeights& w, const Var<T>& gan_d) {
  SRTGAN_CHECK(w.gan >= 0, "fused discriminator loss: negative weight");
  check_component(gan_d, "gan", "fused discriminator loss");
  return nn::weighted_sum<T>({gan_d}, {T(w.gan)});
}

#define SRTGAN_INSTANTIATE_LOSSES(T)                                            \
  template nn::Var<T> content_loss(const nn::Var<T>&, const nn::Var<T>&);       \
  template nn::Var<T> perceptual_loss(const VggExtractor<T>&,                   \
                                      const nn::Var<T>&, const nn::Var<T>&);    \
  template nn::Var<T> qa_loss_from_scores(const nn::Var<T>&, T);                \
  template nn::Var<T> qa_loss(QANetwork<T>&, const nn::Var<T>&,                 \
                              const nn::Var<T>&);                               \
  template nn::Var<T> gan_loss_generator_from_maps(                             \
      const nn::Var<T>&, const nn::Var<T>&, const nn::Var<T>&);                 \
  template nn::Var<T> gan_loss_discriminator_from_maps(                         \
      const nn::Var<T>&, const nn::Var<T>&, const nn::Var<T>&);                 \
  template nn::Var<T> gan_loss_generator(Discriminator<T>&,                     \
                                         const TripletBatch<T>&, bool);         \
  template nn::Var<T> gan_loss_discriminator(Discriminator<T>&,                 \
                                             const TripletBatch<T>&, bool,      \
                                             bool);                             \
  template nn::Var<T> vanilla_gan_loss_generator_from_maps(const nn::Var<T>&);  \
  template nn::Var<T> vanilla_gan_loss_discriminator_from_maps(                 \
      const nn::Var<T>&, const nn::Var<T>&);                                    \
  template nn::Var<T> vanilla_gan_loss_generator(Discriminator<T>&,             \
                                                 const TripletBatch<T>&, bool); \
  template nn::Var<T> vanilla_gan_loss_discriminator(                           \
      Discriminator<T>&, const TripletBatch<T>&, bool, bool);                   \
  template nn::Var<T> fused_generator_loss(const LossWeights&,                  \
                                           const nn::Var<T>&, const nn::Var<T>&,\
                                           const nn::Var<T>&, const nn::Var<T>&);\
  template nn::Var<T> fused_discriminator_loss(const LossWeights&,              \
                                               const nn::Var<T>&);

SRTGAN_INSTANTIATE_LOSSES(float)
SRTGAN_INSTANTIATE_LOSSES(double)
#undef SRTGAN_INSTANTIATE_LOSSES

}  // namespace srtgan

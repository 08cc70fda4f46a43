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

#ifndef SRTGAN_LOSSES_H_
#define SRTGAN_LOSSES_H_

#include "srtgan/discriminator.h"
#include "srtgan/nn/ops.h"
#include "srtgan/qa_network.h"
#include "srtgan/vgg.h"

namespace srtgan {

// Empirical weights of the fused generator objective. The discriminator
// objective reuses gan only.
struct LossWeights {
  double content = 5.0;
  double qa = 2e-7;
  double gan = 1e-1;
  double perceptual = 5e-1;
};

// anchor = generated SR, positive = ground-truth HR, negative = bicubic x4
// upsample of the LR input. All [N,3,H,W] of one shape.
template <typename T>
struct TripletBatch {
  nn::Var<T> anchor, positive, negative;
};

// Mean absolute difference over every element.
template <typename T>
nn::Var<T> content_loss(const nn::Var<T>& sr, const nn::Var<T>& hr);

// Sum over the extractor's taps of the MSE between channel-unit-normalized
// features of the two images.
template <typename T>
nn::Var<T> perceptual_loss(const VggExtractor<T>& extractor,
                           const nn::Var<T>& sr, const nn::Var<T>& hr);

// Batch mean of (best - score) given raw scores [N,1].
template <typename T>
nn::Var<T> qa_loss_from_scores(const nn::Var<T>& scores, T best = T(5));

// Batch mean of (score_max - Q(sr, hr)) through the quality scorer, dropout
// off (the scorer acts as a frozen critic here).
template <typename T>
nn::Var<T> qa_loss(QANetwork<T>& qa, const nn::Var<T>& sr, const nn::Var<T>& hr);

// Triplet objectives over precomputed patch maps. Generator pulls the
// anchor's embedding toward the positive and away from the negative:
//   mean[(D_sr - D_hr)^2] - mean[(D_sr - D_neg)^2] + 1.
// The discriminator sees positive and negative roles interchanged. The two
// always sum to exactly 2 for fixed maps; neither is clamped.
template <typename T>
nn::Var<T> gan_loss_generator_from_maps(const nn::Var<T>& d_sr,
                                        const nn::Var<T>& d_hr,
                                        const nn::Var<T>& d_neg);
template <typename T>
nn::Var<T> gan_loss_discriminator_from_maps(const nn::Var<T>& d_sr,
                                            const nn::Var<T>& d_hr,
                                            const nn::Var<T>& d_neg);

// Same objectives with the three discriminator passes done internally.
template <typename T>
nn::Var<T> gan_loss_generator(Discriminator<T>& d, const TripletBatch<T>& t,
                              bool training = true);
template <typename T>
nn::Var<T> gan_loss_discriminator(Discriminator<T>& d, const TripletBatch<T>& t,
                                  bool training = true,
                                  bool update_running = false);

// Least-squares pairwise objectives, the ablation stand-in for the triplet
// formulation: D is pushed to 1 on HR and 0 on SR, G to 1 on SR.
template <typename T>
nn::Var<T> vanilla_gan_loss_generator_from_maps(const nn::Var<T>& d_sr);
template <typename T>
nn::Var<T> vanilla_gan_loss_discriminator_from_maps(const nn::Var<T>& d_sr,
                                                    const nn::Var<T>& d_hr);
template <typename T>
nn::Var<T> vanilla_gan_loss_generator(Discriminator<T>& d,
                                      const TripletBatch<T>& t,
                                      bool training = true);
template <typename T>
nn::Var<T> vanilla_gan_loss_discriminator(Discriminator<T>& d,
                                          const TripletBatch<T>& t,
                                          bool training = true,
                                          bool update_running = false);

// w.content*content + w.qa*qa + w.gan*gan_g + w.perceptual*perceptual.
// Every component must be a finite scalar; the error names the bad term.
template <typename T>
nn::Var<T> fused_generator_loss(const LossWeights& w, const nn::Var<T>& content,
                                const nn::Var<T>& qa, const nn::Var<T>& gan_g,
                                const nn::Var<T>& perceptual);

// w.gan * gan_d.
template <typename T>
nn::Var<T> fused_discriminator_loss(const LossWeights& w,
                                    const nn::Var<T>& gan_d);

#define SRTGAN_EXTERN_LOSSES(T)                                                 \
  extern template nn::Var<T> content_loss(const nn::Var<T>&, const nn::Var<T>&); \
  extern template nn::Var<T> perceptual_loss(const VggExtractor<T>&,            \
                                             const nn::Var<T>&,                 \
                                             const nn::Var<T>&);                \
  extern template nn::Var<T> qa_loss_from_scores(const nn::Var<T>&, T);         \
  extern template nn::Var<T> qa_loss(QANetwork<T>&, const nn::Var<T>&,          \
                                     const nn::Var<T>&);                        \
  extern template nn::Var<T> gan_loss_generator_from_maps(                      \
      const nn::Var<T>&, const nn::Var<T>&, const nn::Var<T>&);                 \
  extern template nn::Var<T> gan_loss_discriminator_from_maps(                  \
      const nn::Var<T>&, const nn::Var<T>&, const nn::Var<T>&);                 \
  extern template nn::Var<T> gan_loss_generator(Discriminator<T>&,              \
                                                const TripletBatch<T>&, bool);  \
  extern template nn::Var<T> gan_loss_discriminator(                            \
      Discriminator<T>&, const TripletBatch<T>&, bool, bool);                   \
  extern template nn::Var<T> vanilla_gan_loss_generator_from_maps(              \
      const nn::Var<T>&);                                                       \
  extern template nn::Var<T> vanilla_gan_loss_discriminator_from_maps(          \
      const nn::Var<T>&, const nn::Var<T>&);                                    \
  extern template nn::Var<T> vanilla_gan_loss_generator(                        \
      Discriminator<T>&, const TripletBatch<T>&, bool);                         \
  extern template nn::Var<T> vanilla_gan_loss_discriminator(                    \
      Discriminator<T>&, const TripletBatch<T>&, bool, bool);                   \
  extern template nn::Var<T> fused_generator_loss(                              \
      const LossWeights&, const nn::Var<T>&, const nn::Var<T>&,                 \
      const nn::Var<T>&, const nn::Var<T>&);                                    \
  extern template nn::Var<T> fused_discriminator_loss(const LossWeights&,       \
                                                      const nn::Var<T>&);

SRTGAN_EXTERN_LOSSES(float)
SRTGAN_EXTERN_LOSSES(double)
#undef SRTGAN_EXTERN_LOSSES

}  // namespace srtgan

#endif  // SRTGAN_LOSSES_H_

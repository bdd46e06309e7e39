// Copyright 2026 The dirpat Authors
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

#include <algorithm>
#include <numeric>
#include <string>

#include "dirpat/classifier.hpp"
#include "dirpat/error.hpp"

namespace dirpat {

double chi_square_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff / (a[i] + b[i] + kChiSquareEpsilon);
  }
  return acc;
}

int knn_predict(std::span<const FeatureVector> train, std::span<const int> labels,
                const FeatureVector& query, int k) {
  if (train.empty()) fail(ErrorCode::EmptyDataset, "k-NN needs at least one training vector");
  if (train.size() != labels.size()) fail(ErrorCode::InvalidArgument, "feature and label counts differ");
  if (k < 1 || static_cast<std::size_t>(k) > train.size()) {
    fail(ErrorCode::KTooLarge, "k = " + std::to_string(k) + " with " +
                                   std::to_string(train.size()) + " training vectors");
  }
  for (const auto& fv : train) {
    if (!(fv.meta == query.meta) || fv.values.size() != query.values.size()) {
      fail(ErrorCode::InconsistentFeatureMeta, "k-NN query layout differs from training data");
    }
  }

  std::vector<double> dist(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    dist[i] = chi_square_distance(train[i].values, query.values);
  }
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

  std::vector<int> nearest;
  for (int i = 0; i < k; ++i) nearest.push_back(labels[order[static_cast<std::size_t>(i)]]);
  std::sort(nearest.begin(), nearest.end());
  int best = nearest.front();
  int best_count = 0;
  for (std::size_t i = 0; i < nearest.size();) {
    std::size_t j = i;
    while (j < nearest.size() && nearest[j] == nearest[i]) ++j;
    if (static_cast<int>(j - i) > best_count) {
      best_count = static_cast<int>(j - i);
      best = nearest[i];
    }
    i = j;
  }
  return best;
}

}  // namespace dirpat

// word2vec.cpp

// Copyright 2026 Capforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capforge/word2vec.hpp"

#include <cmath>
#include <cstdint>

#include "capforge/error.hpp"
#include "capforge/rng.hpp"

namespace capforge {

namespace {

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Cumulative unigram^0.75 table over ids with nonzero counts; sampling
// is a binary search over one uniform draw.
struct NegativeTable {
  std::vector<int32_t> ids;
  std::vector<double> cumulative;

  int32_t Sample(Rng& rng) const {
    double u = rng.Uniform() * cumulative.back();
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    size_t k = static_cast<size_t>(it - cumulative.begin());
    if (k >= ids.size()) k = ids.size() - 1;
    return ids[k];
  }
};

NegativeTable BuildNegativeTable(const std::vector<int64_t>& counts) {
  NegativeTable table;
  double running = 0.0;
  for (size_t id = 0; id < counts.size(); ++id) {
    if (counts[id] <= 0) continue;
    running += std::pow(static_cast<double>(counts[id]), 0.75);
    table.ids.push_back(static_cast<int32_t>(id));
    table.cumulative.push_back(running);
  }
  return table;
}

}  // namespace

MatX TrainWord2Vec(const std::vector<std::vector<std::string>>& corpus,
                   const Vocabulary& vocab, const W2VConfig& config) {
  if (corpus.empty()) ThrowData("EmptyCorpus", "word2vec needs sentences");
  int32_t v = vocab.Size();
  int dim = config.dim;

  Rng rng(config.seed);
  MatX input = MatX::Zero(v, dim);
  MatX output = MatX::Zero(v, dim);
  for (int32_t i = 0; i < v; ++i) {
    for (int d = 0; d < dim; ++d) {
      input(i, d) = (rng.Uniform() - 0.5) / dim;
    }
  }

  // Sentences as id sequences, skipping out-of-vocabulary tokens.
  std::vector<std::vector<int32_t>> sentences;
  std::vector<int64_t> counts(static_cast<size_t>(v), 0);
  int64_t total_words = 0;
  for (const auto& sentence : corpus) {
    std::vector<int32_t> ids;
    for (const auto& token : sentence) {
      int32_t id = vocab.IdOf(token);
      if (id < Vocabulary::kNumReserved) continue;
      ids.push_back(id);
      ++counts[static_cast<size_t>(id)];
      ++total_words;
    }
    if (!ids.empty()) sentences.push_back(std::move(ids));
  }
  if (total_words == 0) return input;

  NegativeTable negatives = BuildNegativeTable(counts);
  int64_t schedule_total = static_cast<int64_t>(config.epochs) * total_words;
  int64_t trained = 0;

  RowVecX grad_accum(dim);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (const auto& ids : sentences) {
      auto n = static_cast<int64_t>(ids.size());
      for (int64_t pos = 0; pos < n; ++pos) {
        double alpha =
            config.lr *
            std::max(1.0 - static_cast<double>(trained) / (schedule_total + 1),
                     1e-4);
        ++trained;
        int32_t center = ids[static_cast<size_t>(pos)];
        auto radius =
            static_cast<int64_t>(1 + rng.UniformInt(
                                         static_cast<uint64_t>(config.window)));
        for (int64_t off = -radius; off <= radius; ++off) {
          if (off == 0) continue;
          int64_t ctx_pos = pos + off;
          if (ctx_pos < 0 || ctx_pos >= n) continue;
          int32_t context = ids[static_cast<size_t>(ctx_pos)];

          grad_accum.setZero();
          auto center_row = input.row(center);
          for (int k = 0; k <= config.negatives; ++k) {
            int32_t target;
            double label;
            if (k == 0) {
              target = context;
              label = 1.0;
            } else {
              target = negatives.Sample(rng);
              if (target == context) continue;
              label = 0.0;
            }
            auto out_row = output.row(target);
            double score = Sigmoid(center_row.dot(out_row));
            double g = alpha * (label - score);
            grad_accum += g * out_row;
            output.row(target) += g * center_row;
          }
          input.row(center) += grad_accum;
        }
      }
    }
  }
  if (!input.allFinite()) {
    ThrowNumeric("NonFiniteGradient", "word2vec diverged");
  }
  return input;
}

}  // namespace capforge

// capforge/word2vec.hpp

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

#ifndef CAPFORGE_WORD2VEC_HPP_
#define CAPFORGE_WORD2VEC_HPP_

#include <string>
#include <vector>

#include "capforge/types.hpp"
#include "capforge/vocab.hpp"

namespace capforge {

struct W2VConfig {
  int dim = 256;
  int window = 5;     // context radius
  int negatives = 5;  // negative samples per positive pair
  int epochs = 15;
  double lr = 0.025;  // linearly decayed
  int min_count = 1;
  uint64_t seed = 1;
};

// Skip-gram with negative sampling over the tokenized corpus. Negatives
// are drawn from the unigram^0.75 distribution. Returns the V x dim
// input-vector matrix; reserved ids keep their small random
// initialization. Deterministic given (corpus, seed).
MatX TrainWord2Vec(const std::vector<std::vector<std::string>>& corpus,
                   const Vocabulary& vocab, const W2VConfig& config);

}  // namespace capforge

#endif  // CAPFORGE_WORD2VEC_HPP_

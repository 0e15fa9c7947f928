// capforge/vocab.hpp

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

#ifndef CAPFORGE_VOCAB_HPP_
#define CAPFORGE_VOCAB_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "capforge/types.hpp"

namespace capforge {

// Ids 0..3 are reserved for <pad>, <sos>, <eos>, <unk>; real tokens
// start at 4 in first-occurrence order.
class Vocabulary {
 public:
  static constexpr int32_t kPad = 0;
  static constexpr int32_t kSos = 1;
  static constexpr int32_t kEos = 2;
  static constexpr int32_t kUnk = 3;
  static constexpr int32_t kNumReserved = 4;

  Vocabulary();

  // Adds a token if absent; returns its id.
  int32_t Add(const std::string& token);

  // <unk> for out-of-vocabulary tokens.
  int32_t IdOf(const std::string& token) const;
  const std::string& TokenOf(int32_t id) const;
  bool Contains(const std::string& token) const;

  int32_t Size() const { return static_cast<int32_t>(id_to_token_.size()); }

 private:
  std::unordered_map<std::string, int32_t> token_to_id_;
  std::vector<std::string> id_to_token_;
};

// Lowercases, splits on whitespace and strips punctuation from token
// edges. Tokens that strip to nothing are dropped. Throws EmptyCaption
// when the input has no characters.
std::vector<std::string> Tokenize(const std::string& caption);

// All tokens with count >= min_count, in first-occurrence order.
Vocabulary BuildVocabulary(
    const std::vector<std::vector<std::string>>& captions, int min_count = 1);

// [<sos>] + ids + [<eos>], right-padded with <pad> to max_len; content
// beyond max_len - 1 tokens is dropped.
TokenIds EncodeCaption(const std::vector<std::string>& caption,
                       const Vocabulary& vocab, int max_len);

// Ids back to tokens, stopping at the first <eos>; reserved ids are
// skipped.
std::vector<std::string> DecodeIds(const TokenIds& ids,
                                   const Vocabulary& vocab);

// Text format: four reserved lines then one token per line in id order.
void SaveVocabulary(const std::string& path, const Vocabulary& vocab);
Vocabulary LoadVocabulary(const std::string& path);

}  // namespace capforge

#endif  // CAPFORGE_VOCAB_HPP_

// vocab.cpp

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

#include "capforge/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "capforge/error.hpp"

namespace capforge {

namespace {
const char* const kReservedTokens[] = {"<pad>", "<sos>", "<eos>", "<unk>"};
}  // namespace

Vocabulary::Vocabulary() {
  for (const char* t : kReservedTokens) {
    token_to_id_.emplace(t, static_cast<int32_t>(id_to_token_.size()));
    id_to_token_.emplace_back(t);
  }
}

int32_t Vocabulary::Add(const std::string& token) {
  auto [it, inserted] =
      token_to_id_.emplace(token, static_cast<int32_t>(id_to_token_.size()));
  if (inserted) id_to_token_.push_back(token);
  return it->second;
}

int32_t Vocabulary::IdOf(const std::string& token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnk : it->second;
}

const std::string& Vocabulary::TokenOf(int32_t id) const {
  if (id < 0 || id >= Size()) {
    ThrowData("UnknownId", "id " + std::to_string(id) + " out of range");
  }
  return id_to_token_[static_cast<size_t>(id)];
}

bool Vocabulary::Contains(const std::string& token) const {
  return token_to_id_.count(token) > 0;
}

std::vector<std::string> Tokenize(const std::string& caption) {
  if (caption.empty()) ThrowData("EmptyCaption", "caption has no characters");
  std::vector<std::string> tokens;
  size_t i = 0;
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (i < caption.size()) {
    while (i < caption.size() && is_space(caption[i])) ++i;
    size_t start = i;
    while (i < caption.size() && !is_space(caption[i])) ++i;
    if (i == start) break;
    std::string word = caption.substr(start, i - start);
    // Strip punctuation from the edges, keep interior (e.g. "don't").
    size_t lo = 0;
    size_t hi = word.size();
    auto is_punct = [](unsigned char c) {
      return std::ispunct(c) != 0;
    };
    while (lo < hi && is_punct(word[lo])) ++lo;
    while (hi > lo && is_punct(word[hi - 1])) --hi;
    if (lo == hi) continue;
    std::string token = word.substr(lo, hi - lo);
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    tokens.push_back(std::move(token));
  }
  return tokens;
}

Vocabulary BuildVocabulary(
    const std::vector<std::vector<std::string>>& captions, int min_count) {
  std::unordered_map<std::string, int> counts;
  for (const auto& caption : captions) {
    for (const auto& token : caption) {
      if (!token.empty()) ++counts[token];
    }
  }
  Vocabulary vocab;
  for (const auto& caption : captions) {
    for (const auto& token : caption) {
      if (token.empty()) continue;
      if (counts[token] >= min_count) vocab.Add(token);
    }
  }
  return vocab;
}

TokenIds EncodeCaption(const std::vector<std::string>& caption,
                       const Vocabulary& vocab, int max_len) {
  TokenIds ids;
  ids.reserve(static_cast<size_t>(max_len));
  ids.push_back(Vocabulary::kSos);
  size_t content_cap = static_cast<size_t>(max_len) - 1;
  for (const auto& token : caption) {
    if (ids.size() - 1 >= content_cap) break;
    ids.push_back(vocab.IdOf(token));
  }
  if (ids.size() < static_cast<size_t>(max_len)) {
    ids.push_back(Vocabulary::kEos);
  }
  ids.resize(static_cast<size_t>(max_len), Vocabulary::kPad);
  return ids;
}

std::vector<std::string> DecodeIds(const TokenIds& ids,
                                   const Vocabulary& vocab) {
  std::vector<std::string> tokens;
  for (int32_t id : ids) {
    if (id == Vocabulary::kEos) break;
    if (id < Vocabulary::kNumReserved) continue;
    tokens.push_back(vocab.TokenOf(id));
  }
  return tokens;
}

void SaveVocabulary(const std::string& path, const Vocabulary& vocab) {
  std::ofstream out(path);
  if (!out) ThrowData("IoError", "cannot write " + path);
  for (int32_t id = 0; id < vocab.Size(); ++id) {
    out << vocab.TokenOf(id) << '\n';
  }
}

Vocabulary LoadVocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowData("IoError", "cannot open " + path);
  Vocabulary vocab;
  std::string line;
  int32_t line_no = 0;
  while (std::getline(in, line)) {
    if (line_no < Vocabulary::kNumReserved) {
      if (line != vocab.TokenOf(line_no)) {
        ThrowData("BadMagic", path + " lacks the reserved-token preamble");
      }
    } else {
      if (line.empty()) {
        ThrowData("BadMagic", "empty token line in " + path);
      }
      vocab.Add(line);
    }
    ++line_no;
  }
  if (line_no < Vocabulary::kNumReserved) {
    ThrowData("BadMagic", path + " is too short to be a vocabulary file");
  }
  return vocab;
}

}  // namespace capforge

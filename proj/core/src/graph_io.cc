// Copyright 2026 The matchreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchreg/graph_io.h"

#include <charconv>
#include <cstdint>
#include <vector>

#include "matchreg/error.h"

namespace matchreg {

namespace {

// Whitespace-separated non-negative integers with line tracking.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool AtEnd() {
    Skip();
    return pos_ >= text_.size();
  }

  std::int64_t Next(const char* what) {
    Skip();
    if (pos_ >= text_.size()) Bad(std::string("missing ") + what);
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !IsSpace(*ptr))) {
      Bad(std::string("malformed ") + what);
    }
    if (value < 0) Bad(std::string("negative ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void Bad(const std::string& msg) const {
    Fail(ErrorCode::kParseError, "line " + std::to_string(line_) + ": " + msg);
  }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  void Skip() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

VertexId AsVertex(Tokens& tok, std::int64_t v, std::int64_t n) {
  if (v >= n) tok.Bad("vertex " + std::to_string(v) + " out of range");
  return static_cast<VertexId>(v);
}

}  // namespace

Graph ReadEdgeList(std::string_view text) {
  Tokens tok(text);
  const std::int64_t n = tok.Next("vertex count");
  const std::int64_t m = tok.Next("edge count");
  if (n > 100'000'000 || m > 1'000'000'000) tok.Bad("instance too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t u = tok.Next("edge endpoint");
    const std::int64_t v = tok.Next("edge endpoint");
    edges.emplace_back(AsVertex(tok, u, n), AsVertex(tok, v, n));
  }
  if (!tok.AtEnd()) tok.Bad("trailing content after " + std::to_string(m) + " edges");
  try {
    return Graph::FromEdges(static_cast<int>(n), edges);
  } catch (const Error& e) {
    Fail(ErrorCode::kParseError, e.what());
  }
}

std::string WriteEdgeList(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Matching ReadMatching(const Graph& g, std::string_view text) {
  Tokens tok(text);
  std::vector<Edge> edges;
  while (!tok.AtEnd()) {
    const std::int64_t u = tok.Next("matching endpoint");
    const std::int64_t v = tok.Next("matching endpoint");
    edges.emplace_back(AsVertex(tok, u, g.num_vertices()),
                       AsVertex(tok, v, g.num_vertices()));
  }
  try {
    return Matching::FromEdges(g, edges);
  } catch (const Error& e) {
    Fail(ErrorCode::kParseError, e.what());
  }
}

std::string WriteMatching(const Matching& m) {
  std::string out;
  for (const auto& [u, v] : m.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

StrategyProfile ReadProfile(const Graph& g, std::string_view text) {
  Tokens tok(text);
  const int n = g.num_vertices();
  std::vector<VertexId> choice(static_cast<std::size_t>(n), kNoVertex);
  while (!tok.AtEnd()) {
    const VertexId i = AsVertex(tok, tok.Next("vertex"), n);
    const VertexId s = AsVertex(tok, tok.Next("choice"), n);
    if (choice[static_cast<std::size_t>(i)] != kNoVertex) {
      tok.Bad("vertex " + std::to_string(i) + " listed twice");
    }
    choice[static_cast<std::size_t>(i)] = s;
  }
  for (VertexId i = 0; i < n; ++i) {
    if (choice[static_cast<std::size_t>(i)] == kNoVertex) {
      Fail(ErrorCode::kParseError, "no choice for vertex " + std::to_string(i));
    }
  }
  StrategyProfile s(std::move(choice));
  try {
    s.Validate(g);
  } catch (const Error& e) {
    Fail(ErrorCode::kParseError, e.what());
  }
  return s;
}

std::string WriteProfile(const StrategyProfile& s) {
  std::string out;
  for (VertexId i = 0; i < s.size(); ++i) {
    out += std::to_string(i) + " " + std::to_string(s[i]) + "\n";
  }
  return out;
}

}  // namespace matchreg

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "duval/ade.hpp"
#include "duval/errors.hpp"

namespace duval {

/// Multiset of du Val singularity types on a surface, kept sorted.
class Basket {
 public:
  Basket() = default;

  Basket(std::initializer_list<AdeType> types) : entries_(types) { std::sort(entries_.begin(), entries_.end()); }

  explicit Basket(std::vector<AdeType> types) : entries_(std::move(types)) {
    std::sort(entries_.begin(), entries_.end());
  }

  void add(const AdeType& t, int multiplicity = 1) {
    for (int i = 0; i < multiplicity; ++i) entries_.insert(std::upper_bound(entries_.begin(), entries_.end(), t), t);
  }

  const std::vector<AdeType>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Number of singular points.
  std::size_t point_count() const noexcept { return entries_.size(); }

  /// Sum of the exceptional curve counts d_i.
  int total_d() const noexcept {
    int s = 0;
    for (const auto& t : entries_) s += t.components();
    return s;
  }

  std::map<AdeType, int> multiplicities() const {
    std::map<AdeType, int> m;
    for (const auto& t : entries_) ++m[t];
    return m;
  }

  /// Multiplicity-prefixed tokens, e.g. "A_1 3A_2"; empty string for no singularities.
  std::string to_string() const {
    std::string out;
    for (const auto& [t, k] : multiplicities()) {
      if (!out.empty()) out += ' ';
      if (k > 1) out += std::to_string(k);
      out += t.name();
    }
    return out;
  }

  friend bool operator==(const Basket&, const Basket&) = default;
  friend auto operator<=>(const Basket& a, const Basket& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<AdeType> entries_;
};

/// Parses tokens such as "3A_2", "A_10" or "E8", separated by blanks or commas.
/// "-" and "(empty)" denote the empty basket.
inline Basket parse_basket(std::string_view text) {
  constexpr int kMaxMultiplicity = 1000;
  Basket b;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ','; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "-" || tok == "(empty)") continue;

    std::size_t p = 0;
    int mult = 0;
    while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p])) && mult <= kMaxMultiplicity)
      mult = mult * 10 + (tok[p++] - '0');
    if (mult > kMaxMultiplicity) throw InvalidType("multiplicity too large in '" + std::string(tok) + "'");
    if (p == 0) mult = 1;
    if (p == tok.size()) throw InvalidType("bad basket token '" + std::string(tok) + "'");
    AdeKind kind;
    switch (tok[p]) {
      case 'A': kind = AdeKind::A; break;
      case 'D': kind = AdeKind::D; break;
      case 'E': kind = AdeKind::E; break;
      default: throw InvalidType("bad basket token '" + std::string(tok) + "'");
    }
    ++p;
    if (p < tok.size() && tok[p] == '_') ++p;
    if (p == tok.size() || mult == 0) throw InvalidType("bad basket token '" + std::string(tok) + "'");
    int rank = 0;
    for (; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p])) || rank > AdeType::kMaxRank)
        throw InvalidType("bad basket token '" + std::string(tok) + "'");
      rank = rank * 10 + (tok[p] - '0');
    }
    b.add(AdeType(kind, rank), mult);
  }
  return b;
}

}  // namespace duval

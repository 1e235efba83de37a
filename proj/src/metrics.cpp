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
//
// Copyright 2026 The transdist Authors.

#include "transdist/metrics.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace transdist {

const std::vector<MetricId>& all_metrics() {
  static const std::vector<MetricId> kAll = {
      MetricId::kHamming,     MetricId::kTransposition,
      MetricId::kConjugacy,   MetricId::kLevenshtein,
      MetricId::kLcs,         MetricId::kDamerauLevenshtein,
      MetricId::kLength,      MetricId::kDiscrete};
  return kAll;
}

const std::vector<MetricId>& edit_graph_metrics() {
  static const std::vector<MetricId> kEdit(all_metrics().begin(),
                                           all_metrics().end() - 1);
  return kEdit;
}

std::string_view metric_name(MetricId m) {
  switch (m) {
    case MetricId::kHamming: return "hamming";
    case MetricId::kTransposition: return "transposition";
    case MetricId::kConjugacy: return "conjugacy";
    case MetricId::kLevenshtein: return "levenshtein";
    case MetricId::kLcs: return "lcs";
    case MetricId::kDamerauLevenshtein: return "damerau";
    case MetricId::kLength: return "length";
    case MetricId::kDiscrete: return "discrete";
  }
  return "?";
}

MetricId parse_metric(std::string_view name) {
  for (MetricId m : all_metrics()) {
    if (metric_name(m) == name) return m;
  }
  if (name == "ham") return MetricId::kHamming;
  if (name == "trans") return MetricId::kTransposition;
  if (name == "conj") return MetricId::kConjugacy;
  if (name == "lev") return MetricId::kLevenshtein;
  if (name == "damerau_levenshtein" || name == "dl") {
    return MetricId::kDamerauLevenshtein;
  }
  if (name == "len") return MetricId::kLength;
  throw InputError("unknown metric '" + std::string(name) + "'");
}

ExtendedNat hamming_distance(std::u32string_view u, std::u32string_view v) {
  if (u.size() != v.size()) return ExtendedNat::infinity();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
  return d;
}

namespace {

std::uint64_t count_inversions(std::vector<std::size_t>& a, std::size_t lo,
                               std::size_t hi, std::vector<std::size_t>& tmp) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv =
      count_inversions(a, lo, mid, tmp) + count_inversions(a, mid, hi, tmp);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += mid - i;
      tmp[k++] = a[j++];
    } else {
      tmp[k++] = a[i++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
  return inv;
}

}  // namespace

ExtendedNat transposition_distance(std::u32string_view u,
                                   std::u32string_view v) {
  if (u.size() != v.size()) return ExtendedNat::infinity();
  // Pair the i-th occurrence of each letter in u with the i-th in v.
  std::unordered_map<Letter, std::deque<std::size_t>> slots;
  for (std::size_t j = 0; j < v.size(); ++j) slots[v[j]].push_back(j);
  std::vector<std::size_t> target(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto it = slots.find(u[i]);
    if (it == slots.end() || it->second.empty()) return ExtendedNat::infinity();
    target[i] = it->second.front();
    it->second.pop_front();
  }
  std::vector<std::size_t> tmp(target.size());
  return count_inversions(target, 0, target.size(), tmp);
}

ExtendedNat conjugacy_distance(std::u32string_view u, std::u32string_view v) {
  const std::size_t n = u.size();
  if (n != v.size()) return ExtendedNat::infinity();
  if (n == 0) return 0;
  ExtendedNat best = ExtendedNat::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    // v == u[k..] u[..k]
    if (u.substr(k) == v.substr(0, n - k) && u.substr(0, k) == v.substr(n - k)) {
      best = min(best, ExtendedNat(std::min(k, n - k)));
    }
  }
  return best;
}

std::uint64_t levenshtein_distance(std::u32string_view u,
                                   std::u32string_view v) {
  std::vector<std::uint64_t> prev(v.size() + 1), cur(v.size() + 1);
  for (std::size_t j = 0; j <= v.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= v.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (u[i - 1] != v[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[v.size()];
}

std::uint64_t lcs_distance(std::u32string_view u, std::u32string_view v) {
  std::vector<std::uint64_t> prev(v.size() + 1, 0), cur(v.size() + 1, 0);
  for (std::size_t i = 1; i <= u.size(); ++i) {
    for (std::size_t j = 1; j <= v.size(); ++j) {
      cur[j] = u[i - 1] == v[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return u.size() + v.size() - 2 * prev[v.size()];
}

std::uint64_t damerau_levenshtein_distance(std::u32string_view u,
                                           std::u32string_view v) {
  // Lowrance-Wagner with a last-occurrence row per letter.
  const std::size_t n = u.size(), m = v.size();
  const std::uint64_t inf = n + m;
  std::vector<std::vector<std::uint64_t>> h(n + 2,
                                            std::vector<std::uint64_t>(m + 2));
  h[0][0] = inf;
  for (std::size_t i = 0; i <= n; ++i) {
    h[i + 1][0] = inf;
    h[i + 1][1] = i;
  }
  for (std::size_t j = 0; j <= m; ++j) {
    h[0][j + 1] = inf;
    h[1][j + 1] = j;
  }
  std::unordered_map<Letter, std::size_t> last_row;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t last_col = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      auto it = last_row.find(v[j - 1]);
      std::size_t i1 = it == last_row.end() ? 0 : it->second;
      std::size_t j1 = last_col;
      std::uint64_t cost = 1;
      if (u[i - 1] == v[j - 1]) {
        cost = 0;
        last_col = j;
      }
      h[i + 1][j + 1] = std::min({h[i][j] + cost, h[i + 1][j] + 1,
                                  h[i][j + 1] + 1,
                                  h[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[u[i - 1]] = i;
  }
  return h[n + 1][m + 1];
}

ExtendedNat word_distance(MetricId m, std::u32string_view u,
                          std::u32string_view v) {
  switch (m) {
    case MetricId::kHamming: return hamming_distance(u, v);
    case MetricId::kTransposition: return transposition_distance(u, v);
    case MetricId::kConjugacy: return conjugacy_distance(u, v);
    case MetricId::kLevenshtein: return levenshtein_distance(u, v);
    case MetricId::kLcs: return lcs_distance(u, v);
    case MetricId::kDamerauLevenshtein:
      return damerau_levenshtein_distance(u, v);
    case MetricId::kLength:
      return u.size() > v.size() ? u.size() - v.size() : v.size() - u.size();
    case MetricId::kDiscrete:
      return u == v ? ExtendedNat(0) : ExtendedNat::infinity();
  }
  throw IntegrityError("unhandled metric");
}

ExtendedNat word_distance(MetricId m, std::u32string_view u,
                          std::u32string_view v, const Alphabet& alphabet) {
  if (!alphabet.contains_all(u) || !alphabet.contains_all(v)) {
    throw InputError("word_distance: word outside the declared alphabet");
  }
  return word_distance(m, u, v);
}

namespace {

// Calls visit(neighbor, cost) for each single edit of w under metric m.
template <class Visit>
void for_each_edit(MetricId m, const Word& w, const Alphabet& alphabet,
                   std::size_t max_len, Visit&& visit) {
  const bool subst = m == MetricId::kHamming || m == MetricId::kLevenshtein ||
                     m == MetricId::kDamerauLevenshtein ||
                     m == MetricId::kLength;
  const bool indel = m == MetricId::kLevenshtein || m == MetricId::kLcs ||
                     m == MetricId::kDamerauLevenshtein ||
                     m == MetricId::kLength;
  const bool swap = m == MetricId::kTransposition ||
                    m == MetricId::kDamerauLevenshtein;
  const std::uint64_t subst_cost = m == MetricId::kLength ? 0 : 1;
  if (subst) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (Letter a : alphabet) {
        if (a == w[i]) continue;
        Word x = w;
        x[i] = a;
        visit(x, subst_cost);
      }
    }
  }
  if (indel) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word x = w;
      x.erase(i, 1);
      visit(x, 1);
    }
    if (w.size() < max_len) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        for (Letter a : alphabet) {
          Word x = w;
          x.insert(x.begin() + static_cast<std::ptrdiff_t>(i), a);
          visit(x, 1);
        }
      }
    }
  }
  if (swap) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) continue;
      Word x = w;
      std::swap(x[i], x[i + 1]);
      visit(x, 1);
    }
  }
  if (m == MetricId::kConjugacy && w.size() > 1) {
    visit(w.substr(1) + w[0], 1);
    visit(w.back() + w.substr(0, w.size() - 1), 1);
  }
}

// 0-1 BFS from `source`; stops early when `target` is settled.
std::unordered_map<Word, std::uint64_t> zero_one_bfs(
    MetricId m, const Word& source, const Alphabet& alphabet,
    std::uint64_t budget, std::size_t max_len, const Word* target) {
  std::unordered_map<Word, std::uint64_t> dist;
  std::unordered_map<Word, bool> settled;
  std::deque<Word> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    if (settled[w]) continue;
    settled[w] = true;
    const std::uint64_t d = dist[w];
    if (target != nullptr && w == *target) break;
    for_each_edit(m, w, alphabet, max_len, [&](const Word& x, std::uint64_t c) {
      const std::uint64_t nd = d + c;
      if (nd > budget) return;
      auto it = dist.find(x);
      if (it != dist.end() && it->second <= nd) return;
      dist[x] = nd;
      if (c == 0) {
        queue.push_front(x);
      } else {
        queue.push_back(x);
      }
    });
  }
  std::unordered_map<Word, std::uint64_t> out;
  for (auto& [w, s] : settled) {
    if (s) out.emplace(w, dist[w]);
  }
  return out;
}

}  // namespace

std::optional<std::uint64_t> oracle_distance(MetricId m, std::u32string_view u,
                                             std::u32string_view v,
                                             std::uint64_t budget,
                                             std::optional<std::size_t> max_len,
                                             const Alphabet& extra) {
  Word su(u), sv(v);
  if (m == MetricId::kDiscrete) {
    if (su == sv) return 0;
    return std::nullopt;
  }
  Alphabet alphabet = Alphabet::of({u, v}).merged(extra);
  std::size_t cap = max_len.value_or(std::max(u.size(), v.size()) + 2);
  auto dist = zero_one_bfs(m, su, alphabet, budget, cap, &sv);
  auto it = dist.find(sv);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

std::map<Word, std::uint64_t> oracle_ball(MetricId m, const Word& source,
                                          const Alphabet& alphabet,
                                          std::uint64_t budget,
                                          std::size_t max_len) {
  std::map<Word, std::uint64_t> out;
  if (m == MetricId::kDiscrete) {
    out.emplace(source, 0);
    return out;
  }
  for (auto& [w, d] :
       zero_one_bfs(m, source, alphabet, budget, max_len, nullptr)) {
    out.emplace(w, d);
  }
  return out;
}

std::vector<std::int64_t> alphabetic_vector(std::u32string_view u,
                                            const Alphabet& alphabet) {
  std::vector<std::int64_t> vec(alphabet.size(), 0);
  for (Letter a : u) {
    auto idx = alphabet.index(a);
    if (!idx) throw InputError("alphabetic_vector: letter outside alphabet");
    ++vec[*idx];
  }
  return vec;
}

MetricOrderReport metric_order_check(const std::vector<WordPair>& samples) {
  MetricOrderReport report;
  for (const auto& [u, v] : samples) {
    auto d = [&](MetricId m) { return word_distance(m, u, v); };
    const ExtendedNat len = d(MetricId::kLength), disc = d(MetricId::kDiscrete);
    const ExtendedNat h = d(MetricId::kHamming), t = d(MetricId::kTransposition);
    const ExtendedNat c = d(MetricId::kConjugacy), l = d(MetricId::kLevenshtein);
    const ExtendedNat lcs = d(MetricId::kLcs);
    const ExtendedNat dl = d(MetricId::kDamerauLevenshtein);
    auto fail = [&](std::string what) {
      if (!report.ok) return;
      report.ok = false;
      report.violation = std::move(what);
      report.pair = {u, v};
    };
    for (MetricId m : edit_graph_metrics()) {
      if (m == MetricId::kLength) continue;
      if (!(len <= d(m))) {
        fail("d_len <= d_" + std::string(metric_name(m)));
      }
      if (!(d(m) <= disc)) {
        fail("d_" + std::string(metric_name(m)) + " <= d_discrete");
      }
    }
    if (!(l <= lcs)) fail("d_l <= d_lcs");
    if (!(lcs <= 2 * l)) fail("d_lcs <= 2 d_l");
    if (!(dl <= l)) fail("d_dl <= d_l");
    if (!(l <= 2 * dl)) fail("d_l <= 2 d_dl");
    if (!(l <= h)) fail("d_l <= d_h");
    if (!(h <= 2 * t)) fail("d_h <= 2 d_t");
    if (!(l <= 2 * c)) fail("d_l <= 2 d_c");
    ++report.checked;
  }
  return report;
}

}  // namespace transdist

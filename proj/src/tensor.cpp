// Copyright 2026 The zxpivot Authors
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

#include "zxpivot/tensor.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

#include <omp.h>

#include "zxpivot/errors.hpp"

namespace zxp::tn {

namespace {

// Work (output entries times summed entries) above which Auto goes parallel.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

struct Plan {
  std::vector<int> result;
  std::vector<std::size_t> a_from_r, a_from_s, b_from_r, b_from_s;
};

int position(const std::vector<int>& labels, int l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

// For every value of an index over `src` labels, the corresponding bits in a
// tensor with `dst` labels (labels missing from dst contribute nothing).
std::vector<std::size_t> scatter(const std::vector<int>& src,
                                 const std::vector<int>& dst) {
  const std::size_t r = src.size();
  std::vector<std::size_t> bit(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    int p = position(dst, src[j]);
    if (p >= 0) bit[r - 1 - j] = std::size_t{1} << (dst.size() - 1 - p);
  }
  // out[idx] = out[idx without its lowest set bit] | that bit's image
  std::vector<std::size_t> out(std::size_t{1} << r, 0);
  for (std::size_t idx = 1; idx < out.size(); ++idx) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(idx));
    out[idx] = out[idx & (idx - 1)] | bit[low];
  }
  return out;
}

Plan make_plan(const Tensor& a, const Tensor& b,
               const std::vector<int>& summed) {
  for (int l : summed)
    if (position(a.labels, l) < 0 || position(b.labels, l) < 0)
      throw PreconditionError("summed label missing from a tensor");
  Plan p;
  for (int l : a.labels)
    if (position(summed, l) < 0) p.result.push_back(l);
  for (int l : b.labels)
    if (position(summed, l) < 0 && position(p.result, l) < 0)
      p.result.push_back(l);
  p.a_from_r = scatter(p.result, a.labels);
  p.b_from_r = scatter(p.result, b.labels);
  p.a_from_s = scatter(summed, a.labels);
  p.b_from_s = scatter(summed, b.labels);
  return p;
}

}  // namespace

Tensor contract_serial(const Tensor& a, const Tensor& b,
                       const std::vector<int>& summed) {
  Plan p = make_plan(a, b, summed);
  Tensor t{p.result, std::vector<cplx>(p.a_from_r.size())};
  for (std::size_t r = 0; r < p.a_from_r.size(); ++r) {
    cplx acc = 0;
    for (std::size_t s = 0; s < p.a_from_s.size(); ++s)
      acc += a.data[p.a_from_r[r] | p.a_from_s[s]] *
             b.data[p.b_from_r[r] | p.b_from_s[s]];
    t.data[r] = acc;
  }
  return t;
}

Tensor contract_parallel(const Tensor& a, const Tensor& b,
                         const std::vector<int>& summed) {
  Plan p = make_plan(a, b, summed);
  Tensor t{p.result, std::vector<cplx>(p.a_from_r.size())};
  const auto n = static_cast<std::ptrdiff_t>(p.a_from_r.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    cplx acc = 0;
    for (std::size_t s = 0; s < p.a_from_s.size(); ++s)
      acc += a.data[p.a_from_r[r] | p.a_from_s[s]] *
             b.data[p.b_from_r[r] | p.b_from_s[s]];
    t.data[r] = acc;
  }
  return t;
}

Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<int>& summed, Exec exec) {
  if (exec == Exec::Auto) {
    std::size_t kept = a.rank() + b.rank() - 2 * summed.size();
    std::size_t work = std::size_t{1} << (kept + summed.size());
    exec = (work >= kParallelThreshold && !omp_in_parallel() &&
            omp_get_max_threads() > 1)
               ? Exec::Parallel
               : Exec::Serial;
  }
  return exec == Exec::Parallel ? contract_parallel(a, b, summed)
                                : contract_serial(a, b, summed);
}

Tensor sum_out(const Tensor& t, int label) {
  Tensor ones{{label}, {1.0, 1.0}};
  return contract_serial(t, ones, {label});
}

Tensor contract_network(std::vector<Tensor> tensors,
                        const std::vector<int>& open, Exec exec) {
  int max_label = -1;
  for (const Tensor& t : tensors)
    for (int l : t.labels) max_label = std::max(max_label, l);
  for (int l : open) max_label = std::max(max_label, l);
  const std::size_t n_labels = static_cast<std::size_t>(max_label + 1);
  std::vector<char> is_open(n_labels, 0);
  for (int l : open) is_open[l] = 1;
  // owners[l] lists the (at most two) tensors carrying label l
  std::vector<std::vector<std::size_t>> owners(n_labels);
  for (std::size_t i = 0; i < tensors.size(); ++i)
    for (int l : tensors[i].labels) owners[l].push_back(i);
  // labels private to a single tensor (self-loops) are traced immediately
  for (std::size_t l = 0; l < n_labels; ++l)
    if (owners[l].size() == 1 && !is_open[l]) {
      std::size_t i = owners[l][0];
      tensors[i] = sum_out(tensors[i], static_cast<int>(l));
      owners[l].clear();
    }
  if (tensors.empty()) return Tensor{{}, {1.0}};

  std::vector<bool> live(tensors.size(), true);
  std::size_t remaining = tensors.size();
  auto shared_count = [&](std::size_t i, std::size_t j) {
    std::size_t k = 0;
    for (int x : tensors[i].labels)
      if (position(tensors[j].labels, x) >= 0) ++k;
    return k;
  };
  while (remaining > 1) {
    std::size_t bi = 0, bj = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& who : owners) {
      if (who.size() != 2 || who[0] == who[1]) continue;
      std::size_t i = std::min(who[0], who[1]), j = std::max(who[0], who[1]);
      std::size_t k = shared_count(i, j);
      std::size_t rank = tensors[i].rank() + tensors[j].rank() - 2 * k;
      std::size_t cost = (rank << 8) + tensors[i].rank() + tensors[j].rank();
      if (cost < best) {
        best = cost;
        bi = i;
        bj = j;
      }
    }
    if (bi == bj) {
      // disconnected pieces: take an outer product of the two smallest
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < tensors.size(); ++i)
        if (live[i]) order.push_back(i);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return tensors[x].rank() < tensors[y].rank();
      });
      bi = std::min(order[0], order[1]);
      bj = std::max(order[0], order[1]);
    }
    std::vector<int> summed;
    for (int l : tensors[bi].labels)
      if (!is_open[l] && position(tensors[bj].labels, l) >= 0)
        summed.push_back(l);
    for (int l : tensors[bj].labels)
      for (auto& i : owners[l])
        if (i == bj) i = bi;
    for (int l : summed) owners[l].clear();
    tensors[bi] = contract(tensors[bi], tensors[bj], summed, exec);
    tensors[bj] = Tensor{};
    live[bj] = false;
    --remaining;
  }
  for (std::size_t i = 0; i < tensors.size(); ++i)
    if (live[i]) return std::move(tensors[i]);
  return Tensor{{}, {1.0}};
}

}  // namespace zxp::tn

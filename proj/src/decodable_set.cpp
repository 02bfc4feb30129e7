#include "nnc/decodable_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace nnc {

namespace {

constexpr double kMargin = 1e-12;

double rate_sum(const std::vector<double>& rates, const std::set<int>& s) {
  double r = 0.0;
  for (int i : s) r += rates[static_cast<std::size_t>(i)];
  return r;
}

std::set<int> full_context(const DecodeContext& ctx, const std::set<int>& t) {
  std::set<int> l = ctx.required;
  l.insert(ctx.node);
  l.insert(t.begin(), t.end());
  return l;
}

// enumerate nonempty subsets of a small vector
template <class F>
void for_each_subset(const std::vector<int>& items, F&& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(items.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::set<int> s;
    for (std::uint32_t b = 0; b < n; ++b)
      if ((mask >> b) & 1u) s.insert(items[b]);
    f(s);
  }
}

}  // namespace

void DecodeContext::validate(int num_nodes) const {
  if (node < 0 || node >= num_nodes)
    throw std::invalid_argument("decode context: node out of range");
  if (required.count(node) || candidates.count(node))
    throw std::invalid_argument("decode context: sets must exclude the node");
  for (int i : required)
    if (candidates.count(i))
      throw std::invalid_argument("decode context: required and candidate sets overlap");
  for (int i : required)
    if (i < 0 || i >= num_nodes)
      throw std::invalid_argument("decode context: required node out of range");
  for (int i : candidates)
    if (i < 0 || i >= num_nodes)
      throw std::invalid_argument("decode context: candidate out of range");
  if (static_cast<int>(rates.size()) != num_nodes)
    throw std::invalid_argument("decode context: rates size mismatch");
}

std::vector<SubsetBound> check_class2(const GaussSpec& spec,
                                      const DecodeContext& ctx,
                                      const std::set<int>& t) {
  ctx.validate(spec.nodes());
  for (int i : t)
    if (!ctx.candidates.count(i))
      throw std::invalid_argument("check_class2: T must be inside the candidates");
  std::vector<SubsetBound> violated;
  if (t.empty()) return violated;
  const std::set<int> l = full_context(ctx, t);
  std::vector<int> items(t.begin(), t.end());
  for_each_subset(items, [&](const std::set<int>& s) {
    SubsetBound b = subset_bound(spec, s, ctx.node, l, ctx.required);
    if (rate_sum(ctx.rates, s) >= b.value - kMargin) violated.push_back(b);
  });
  return violated;
}

namespace {

bool admissible(const GaussSpec& spec, const DecodeContext& ctx,
                const std::set<int>& t) {
  return check_class2(spec, ctx, t).empty();
}

}  // namespace

std::set<int> largest_decodable_set(const GaussSpec& spec,
                                    const DecodeContext& ctx,
                                    const std::vector<int>* seed_order) {
  ctx.validate(spec.nodes());
  std::vector<int> cands(ctx.candidates.begin(), ctx.candidates.end());
  if (seed_order) {
    cands = *seed_order;
    for (int i : cands)
      if (!ctx.candidates.count(i))
        throw std::invalid_argument("seed order must list candidate nodes");
  }
  std::vector<std::set<int>> seeds;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    seeds.push_back({cands[i]});
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      seeds.push_back({cands[i], cands[j]});
  }
  if (cands.size() > 2) seeds.emplace_back(cands.begin(), cands.end());

  std::vector<std::set<int>> valid;
  for (const auto& s : seeds)
    if (admissible(spec, ctx, s)) valid.push_back(s);

  std::set<int> best;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : valid) {
      std::set<int> u = best;
      u.insert(s.begin(), s.end());
      if (u.size() == best.size()) continue;
      if (admissible(spec, ctx, u)) {
        best = std::move(u);
        grew = true;
      }
    }
  }
  return best;
}

std::set<int> largest_decodable_set_exhaustive(const GaussSpec& spec,
                                               const DecodeContext& ctx) {
  ctx.validate(spec.nodes());
  if (ctx.candidates.size() > 12)
    throw std::invalid_argument("exhaustive search capped at 12 candidates");
  std::vector<int> cands(ctx.candidates.begin(), ctx.candidates.end());
  std::set<int> verified_union;
  std::set<int> union_of_valid;
  for_each_subset(cands, [&](const std::set<int>& s) {
    if (admissible(spec, ctx, s)) {
      union_of_valid.insert(s.begin(), s.end());
      if (s.size() > verified_union.size()) verified_union = s;
    }
  });
  if (union_of_valid.empty()) return {};
  if (admissible(spec, ctx, union_of_valid)) return union_of_valid;
  // numerically marginal instance: fall back to the largest verified set
  return verified_union;
}

std::vector<SubsetBound> rates_with_set(const GaussSpec& spec,
                                        const DecodeContext& ctx,
                                        const std::set<int>& t) {
  auto violated = check_class2(spec, ctx, t);
  if (!violated.empty())
    throw std::runtime_error(
        "rates_with_set: helper set fails its admissibility constraints");
  std::set<int> senders = ctx.required;
  senders.insert(t.begin(), t.end());
  if (senders.size() > 16)
    throw std::invalid_argument("rates_with_set: context too large to enumerate");
  const std::set<int> l = full_context(ctx, t);
  std::vector<int> items(senders.begin(), senders.end());
  std::vector<SubsetBound> out;
  for_each_subset(items, [&](const std::set<int>& s) {
    bool wanted = false;
    for (int i : s)
      if (ctx.required.count(i)) wanted = true;
    if (!wanted) return;
    out.push_back(subset_bound(spec, s, ctx.node, l, ctx.required));
  });
  return out;
}

}  // namespace nnc

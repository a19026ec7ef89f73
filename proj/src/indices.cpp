#include "ehrhart/indices.hpp"

namespace ehrhart {

IndexSequence index_sequence(const ConvexPolytope& q, int cap) {
  IndexSequence seq;
  for (int i = 0; i <= q.intrinsic_dim(); ++i) {
    Integer g = 1;
    for (const auto& f : faces(q, i, cap)) g = lcm(g, min_dilate_with_lattice_point(f.span));
    seq.values.push_back(g);
  }
  return seq;
}

bool chain_check(const IndexSequence& seq) {
  for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
    if (seq.values[i + 1] == 0 || seq.values[i] % seq.values[i + 1] != 0) return false;
    if (seq.values[i + 1] > seq.values[i]) return false;
  }
  return true;
}

McMullenReport mcmullen_check(const ConvexPolytope& q, const CountOptions& opts, int cap) {
  McMullenReport r;
  r.indices = index_sequence(q, cap);
  r.chain_ok = chain_check(r.indices);
  r.fitted = fit(counter(q, opts), q.intrinsic_dim(), to_int64(denominator(q)));
  r.periods = period_sequence(r.fitted);
  r.ok = r.chain_ok && r.periods.size() == r.indices.values.size();
  for (std::size_t i = 0; i < r.periods.size(); ++i) {
    const bool d = i < r.indices.values.size() && r.indices.values[i] % r.periods[i] == 0;
    r.divides.push_back(d);
    r.ok = r.ok && d;
  }
  return r;
}

}  // namespace ehrhart

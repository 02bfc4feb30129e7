#pragma once

#include <set>
#include <vector>

#include "nnc/gauss_info.hpp"

namespace nnc {

// Decoding viewpoint of one node: the messages it must decode, the helper
// nodes it may additionally include in its joint test, and the per-node
// message rates the constraints are checked against.
struct DecodeContext {
  int node = -1;
  std::set<int> required;    // senders whose messages the node must decode
  std::set<int> candidates;  // helpers it may include
  std::vector<double> rates; // message rate per node (0 for non-sources)

  void validate(int num_nodes) const;
};

// Helper-only constraints for the candidate set T: every nonempty S inside
// T must keep R_S strictly below its subset bound.  Returns the violated
// bounds (empty list == T is admissible).  Equality counts as a violation;
// a 1e-12 margin guards the comparison.
std::vector<SubsetBound> check_class2(const GaussSpec&, const DecodeContext&,
                                      const std::set<int>& T);

// Unique largest admissible helper set, grown by unioning admissible sets
// (every union is re-verified numerically).  Seeds include all singletons,
// pairs and the full candidate set, which makes the construction complete
// whenever every minimal admissible set has at most two elements; the
// exhaustive variant below is the reference for small instances.
std::set<int> largest_decodable_set(const GaussSpec&, const DecodeContext&,
                                    const std::vector<int>* seed_order = nullptr);

// Brute force over all candidate subsets; capped at 12 candidates.
std::set<int> largest_decodable_set_exhaustive(const GaussSpec&,
                                               const DecodeContext&);

// All rate bounds active at this node once T is fixed (sets meeting the
// required messages).  Throws if T fails its helper-only constraints.
std::vector<SubsetBound> rates_with_set(const GaussSpec&, const DecodeContext&,
                                        const std::set<int>& T);

}  // namespace nnc

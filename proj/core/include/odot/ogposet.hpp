#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "odot/error.hpp"

namespace odot {

// Sorted, duplicate-free list of element ids.
using Subset = std::vector<int>;

enum class Sign : std::uint8_t { Minus = 0, Plus = 1 };
enum class Side : std::uint8_t { Minus, Plus, Both };

constexpr Sign flip(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }
constexpr Side side_of(Sign s) { return s == Sign::Minus ? Side::Minus : Side::Plus; }
// Sign of (-1)^n applied to s.
constexpr Sign twist(Sign s, int n) { return (n % 2 == 0) ? s : flip(s); }
constexpr char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

struct RawElement {
  std::int64_t id = 0;
  int dim = 0;
  std::vector<std::int64_t> input;
  std::vector<std::int64_t> output;
};

// Finite oriented graded poset with dense ids 0..size()-1.
class OgPoset {
 public:
  OgPoset() = default;

  // Validates raw data. Ids may be arbitrary; they are renumbered densely in
  // increasing order.
  static OgPoset build(const std::vector<RawElement>& raw);

  // Dense data, validated (faces must be sorted or are sorted here).
  static OgPoset from_faces(std::vector<int> dims, std::vector<std::vector<int>> in,
                            std::vector<std::vector<int>> out);

  int size() const { return static_cast<int>(dim_.size()); }
  bool empty() const { return dim_.empty(); }
  int dim(int x) const { return dim_[x]; }
  // Maximal dimension, -1 when empty.
  int dimension() const { return top_dim_; }

  const std::vector<int>& faces(int x, Sign a) const { return a == Sign::Minus ? in_[x] : out_[x]; }
  // Elements y such that x is a face of y on side a.
  const std::vector<int>& cofaces(int x, Sign a) const {
    return a == Sign::Minus ? coin_[x] : coout_[x];
  }
  std::vector<int> all_faces(int x) const;

  std::vector<int> grade(int k) const;
  std::vector<int> maximal() const;
  bool has_greatest() const;
  std::optional<int> greatest() const;

  std::vector<RawElement> to_raw() const;

  bool operator==(const OgPoset& o) const {
    return dim_ == o.dim_ && in_ == o.in_ && out_ == o.out_;
  }

 private:
  void index();

  std::vector<int> dim_;
  std::vector<std::vector<int>> in_, out_, coin_, coout_;
  int top_dim_ = -1;
};

using PosetRef = std::shared_ptr<const OgPoset>;

inline PosetRef share(OgPoset p) { return std::make_shared<const OgPoset>(std::move(p)); }

// --- subsets -------------------------------------------------------------

Subset all_of(const OgPoset& P);
std::vector<char> mask_of(const OgPoset& P, const Subset& s);
Subset closure(const OgPoset& P, const Subset& s);
Subset closure_of(const OgPoset& P, int x);
bool is_closed(const OgPoset& P, const Subset& s);
int subset_dim(const OgPoset& P, const Subset& s);
Subset subset_maximal(const OgPoset& P, const Subset& s);
Subset subset_grade(const OgPoset& P, const Subset& s, int k);

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
bool is_subset(const Subset& a, const Subset& b);

// k-th boundary of a closed subset U. k >= dim U returns U, k < 0 returns the
// empty set.
Subset boundary(const OgPoset& P, const Subset& U, int k, Side side);
// Boundary with default k = dim U - 1.
Subset boundary(const OgPoset& P, const Subset& U, Side side);
Subset boundary(const OgPoset& P, int k, Side side);
Subset boundary(const OgPoset& P, Side side);

// For all k < dim U: the two k-boundaries meet exactly in the (k-1)-boundary.
bool is_round(const OgPoset& P, const Subset& U);
bool is_round(const OgPoset& P);

// Induced poset on a closed subset. embed[new] = old, increasing.
struct Restriction {
  OgPoset poset;
  std::vector<int> embed;
};
Restriction restrict_to(const OgPoset& P, const Subset& closed);

// Swap input and output faces at the listed dimensions.
OgPoset dual(const OgPoset& P, const std::vector<int>& dims);

// perm[old] = new.
OgPoset relabel(const OgPoset& P, const std::vector<int>& perm);

// Gray product; (x,y) has id x*|Q|+y.
OgPoset gray_product(const OgPoset& P, const OgPoset& Q);

// Disjoint union, ids of Q shifted by |P|.
OgPoset disjoint_union(const OgPoset& P, const OgPoset& Q);

}  // namespace odot

// Rack enumeration up to isomorphism.
//
// A rack of order n is an n x n table T[x][y] = s_x(y) whose rows are
// permutations and which satisfies
//   T[x][T[y][z]] == T[T[x][y]][T[x][z]].
// The search fills cells in row-major order with constraint propagation and
// keeps only tables that are lexicographically least among all relabelings
// (lex-leader pruning on every partial table).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "glrack/classify.hpp"

namespace glrack {

namespace {

using Cell = std::int8_t;
constexpr Cell unknown = -1;

// Branch-and-bound over relabelings of a (possibly partial) table.  New labels
// are handed out in order; when a position needs a label that is not yet
// assigned, every unlabeled point is tried, and a value whose point is still
// unlabeled always receives the next free label, which is the least value any
// relabeling can put there.
class Relabeler {
 public:
  Relabeler(int n, const Cell* table) : n_(n), t_(table) {
    std::fill(std::begin(lab_), std::end(lab_), unknown);
  }

  // True if some relabeling makes the determined prefix strictly smaller.
  bool beaten() { return beat(0); }

  // Least relabeled table of a complete table; inverse labels in `inv_out`.
  std::vector<Cell> minimize(std::vector<Cell>& lab_out) {
    best_.assign(n_ * n_, 0);
    cur_.assign(n_ * n_, 0);
    have_best_ = false;
    better_ = false;
    lab_out_ = &lab_out;
    minimize_from(0);
    return best_;
  }

 private:
  Cell old_at(int i, int j) const { return t_[inv_[i] * n_ + inv_[j]]; }

  template <typename F>
  bool branch(F&& next) {
    for (int p = 0; p < n_; ++p) {
      if (lab_[p] != unknown) continue;
      lab_[p] = static_cast<Cell>(nl_);
      inv_[nl_++] = static_cast<Cell>(p);
      bool r = next();
      lab_[p] = unknown;
      --nl_;
      if (r) return true;
    }
    return false;
  }

  // Labels the value `old` greedily; returns its label.
  int label_of(Cell old) {
    if (lab_[old] == unknown) {
      lab_[old] = static_cast<Cell>(nl_);
      inv_[nl_++] = old;
    }
    return lab_[old];
  }

  void roll_back(int mark) {
    while (nl_ > mark) lab_[inv_[--nl_]] = unknown;
  }

  bool beat(int pos) {
    if (pos == n_ * n_) return false;
    const int i = pos / n_, j = pos % n_;
    if (std::max(i, j) >= nl_) return branch([&] { return beat(pos); });
    const Cell old = old_at(i, j);
    if (old == unknown) return false;
    const Cell target = t_[pos];
    if (target == unknown) return false;
    const int mark = nl_;
    const int w = label_of(old);
    bool result = false;
    if (w < target)
      result = true;
    else if (w == target)
      result = beat(pos + 1);
    roll_back(mark);
    return result;
  }

  bool minimize_from(int pos) {
    if (pos == n_ * n_) {
      if (!have_best_ || better_) {
        best_ = cur_;
        lab_out_->assign(lab_, lab_ + n_);
        have_best_ = true;
        better_ = false;
      }
      return false;
    }
    const int i = pos / n_, j = pos % n_;
    if (std::max(i, j) >= nl_) return branch([&] { return minimize_from(pos); });
    const int mark = nl_;
    const int w = label_of(old_at(i, j));
    cur_[pos] = static_cast<Cell>(w);
    if (have_best_ && !better_) {
      if (w > best_[pos]) {
        roll_back(mark);
        return false;
      }
      if (w < best_[pos]) better_ = true;
    }
    minimize_from(pos + 1);
    roll_back(mark);
    return false;
  }

  int n_;
  const Cell* t_;
  Cell lab_[max_enumeration_order + 6];
  Cell inv_[max_enumeration_order + 6];
  int nl_ = 0;

  std::vector<Cell> best_, cur_;
  std::vector<Cell>* lab_out_ = nullptr;
  bool have_best_ = false;
  bool better_ = false;
};

class RackEnumerator {
 public:
  RackEnumerator(int n, const EnumerateOptions& options)
      : n_(n), options_(options), t_(n * n, unknown), row_used_(n, 0), row_known_(n, 0) {}

  std::vector<Rack> run() {
    search(0);
    return std::move(found_);
  }

 private:
  Cell& at(int x, int y) { return t_[x * n_ + y]; }

  bool assign(int cell, int v) {
    Cell& c = t_[cell];
    if (c != unknown) return c == v;
    const int x = cell / n_;
    if (row_used_[x] & (1u << v)) return false;
    c = static_cast<Cell>(v);
    row_used_[x] |= 1u << v;
    ++row_known_[x];
    trail_.push_back(cell);
    queue_.push_back(cell);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int cell = trail_.back();
      trail_.pop_back();
      const int x = cell / n_;
      row_used_[x] &= ~(1u << t_[cell]);
      --row_known_[x];
      t_[cell] = unknown;
    }
  }

  bool unify(int c1, int c2) {
    const Cell a = t_[c1], b = t_[c2];
    if (a == unknown && b == unknown) return true;
    if (a == unknown) return assign(c1, b);
    if (b == unknown) return assign(c2, a);
    return a == b;
  }

  bool propagate() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int cell = queue_[head];
      const int p = cell / n_, q = cell % n_;
      const int r = t_[cell];
      // Complete a row with a single gap.
      if (row_known_[p] == n_ - 1) {
        for (int y = 0; y < n_; ++y)
          if (at(p, y) == unknown) {
            const unsigned missing = ~row_used_[p] & ((1u << n_) - 1);
            if (!assign(p * n_ + y, std::countr_zero(missing))) return false;
            break;
          }
      }
      for (int x = 0; x < n_; ++x) {
        // (y, z) = (p, q)
        const Cell a = at(x, p), b = at(x, q);
        if (a != unknown && b != unknown && !unify(x * n_ + r, a * n_ + b)) return false;
      }
      for (int z = 0; z < n_; ++z) {
        // (x, y) = (p, q)
        const Cell c = at(q, z), b = at(p, z);
        if (c != unknown && b != unknown && !unify(p * n_ + c, r * n_ + b)) return false;
      }
      for (int y = 0; y < n_; ++y) {
        // (x, z) = (p, q)
        const Cell a = at(p, y), c = at(y, q);
        if (a != unknown && c != unknown && !unify(p * n_ + c, a * n_ + r)) return false;
      }
    }
    queue_.clear();
    return true;
  }

  bool self_distributive() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (t_[x * n_ + t_[y * n_ + z]] != t_[t_[x * n_ + y] * n_ + t_[x * n_ + z]])
            return false;
    return true;
  }

  void emit() {
    std::vector<Permutation> s;
    for (int x = 0; x < n_; ++x) {
      std::vector<Point> img(n_);
      for (int y = 0; y < n_; ++y) img[y] = static_cast<Point>(t_[x * n_ + y]);
      s.push_back(from_images_unchecked(std::move(img)));
    }
    Rack R = trusted_rack(std::move(s));
    if (options_.on_rack && !options_.on_rack(R)) stopped_ = true;
    found_.push_back(std::move(R));
  }

  void search(int start) {
    if (stopped_) return;
    if (++nodes_ > options_.node_budget)
      throw BudgetExceeded("rack enumeration exceeded node budget");
    int cell = start;
    while (cell < n_ * n_ && t_[cell] != unknown) ++cell;
    if (cell == n_ * n_) {
      if (self_distributive() && !Relabeler(n_, t_.data()).beaten()) emit();
      return;
    }
    const int x = cell / n_;
    for (int v = 0; v < n_ && !stopped_; ++v) {
      if (row_used_[x] & (1u << v)) continue;
      const std::size_t mark = trail_.size();
      queue_.clear();
      if (assign(cell, v) && propagate() && !Relabeler(n_, t_.data()).beaten()) search(cell + 1);
      queue_.clear();
      undo(mark);
    }
  }

  int n_;
  const EnumerateOptions& options_;
  std::vector<Cell> t_;
  std::vector<unsigned> row_used_;
  std::vector<int> row_known_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<Rack> found_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

std::vector<Cell> to_table(const Rack& R) {
  const std::size_t n = R.order();
  std::vector<Cell> t(n * n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) t[x * n + y] = static_cast<Cell>(R.act(x, y));
  return t;
}

}  // namespace

Rack relabel(const Rack& R, const Permutation& pi) {
  const std::size_t n = R.order();
  if (pi.degree() != n) throw std::invalid_argument("relabel: degree mismatch");
  std::vector<Permutation> s(n);
  for (Point x = 0; x < n; ++x) s[pi(x)] = conjugate(pi, R.s(x));
  return trusted_rack(std::move(s));
}

CanonicalForm canonical_form(const Rack& R) {
  const std::size_t n = R.order();
  if (n > max_enumeration_order) throw std::invalid_argument("canonical_form: order too large");
  if (n == 0) return {R, Permutation()};
  std::vector<Cell> table = to_table(R);
  std::vector<Cell> lab;
  Relabeler relabeler(static_cast<int>(n), table.data());
  relabeler.minimize(lab);
  std::vector<Point> pi(n);
  for (std::size_t p = 0; p < n; ++p) pi[p] = static_cast<Point>(lab[p]);
  Permutation relabeling(std::move(pi));
  return {relabel(R, relabeling), relabeling};
}

std::vector<Rack> enumerate_racks(std::size_t n, const EnumerateOptions& options) {
  if (n > max_enumeration_order)
    throw std::invalid_argument("enumerate_racks: order above supported maximum");
  if (n == 0) {
    Rack empty;
    if (options.on_rack) options.on_rack(empty);
    return {empty};
  }
  return RackEnumerator(static_cast<int>(n), options).run();
}

}  // namespace glrack

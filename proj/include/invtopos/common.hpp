#ifndef INVTOPOS_COMMON_HPP_
#define INVTOPOS_COMMON_HPP_

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invtopos {

// Machine-readable failure payload: a short code plus the offending
// elements/points by name.
struct Witness {
  std::string code;
  std::vector<std::string> parts;
  std::string detail;
};

std::string format_witness(Witness const& w);

// Input failed validation or an operation precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Witness w);

  Witness const& witness() const noexcept { return witness_; }
  std::string const& code() const noexcept { return witness_.code; }

 private:
  Witness witness_;
};

// A verified theorem failed to hold. Always an implementation bug.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(std::string const& what)
      : std::logic_error("internal check failed: " + what) {}
};

[[noreturn]] inline void fail(Witness w) { throw ValidationError(std::move(w)); }

// Outcome of a yes/no check that can explain a "no".
struct Verdict {
  bool value = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return value; }

  static Verdict yes() { return Verdict{true, std::nullopt}; }
  static Verdict no(Witness w) { return Verdict{false, std::move(w)}; }
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (rank_[a] < rank_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    if (rank_[a] == rank_[b]) {
      ++rank_[a];
    }
  }

  bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::string join_names(std::vector<std::string> const& names, char sep = ',');

}  // namespace invtopos

#endif  // INVTOPOS_COMMON_HPP_

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "weylfold/rational.hpp"

namespace weylfold {

// Supported ranks top out at 4 (F4/D4) with 24 positive roots (F4), so all
// dynamic vectors/matrices carry fixed max sizes: no heap traffic anywhere.
inline constexpr int kMaxRank = 4;
inline constexpr int kMaxPositive = 24;

using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;
using VecI = Eigen::Matrix<i64, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using MatI = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;
// one integer level per positive root: the canonical form of an alcove
using LevelVec = Eigen::Matrix<i64, Eigen::Dynamic, 1, 0, kMaxPositive, 1>;
// pairing matrix rows indexed by positive roots
using PairMat = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxPositive, kMaxRank>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G', F = 'F' };

struct RootSystemKind {
  Family family;
  int rank;

  std::string name() const {
    return std::string(1, char(family)) + std::to_string(rank);
  }
  friend bool operator==(const RootSystemKind& a, const RootSystemKind& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

inline RootSystemKind parse_kind(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad root system kind: '" + s + "'");
  char f = char(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDGF").find(f) == std::string::npos)
    throw std::invalid_argument("bad root system family: '" + s + "'");
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad root system rank: '" + s + "'");
  }
  return {Family(f), rank};
}

inline VecQ to_q(const VecI& v) {
  VecQ q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

// exact entrywise equality (Eigen's operator== is not a bool)
template <typename D1, typename D2>
inline bool same_entries(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// lexicographic comparators so every set/map in the project iterates
// in a deterministic order
struct VecQLess {
  bool operator()(const VecQ& a, const VecQ& b) const {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
  }
};

struct VecILess {
  bool operator()(const VecI& a, const VecI& b) const {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  }
};

struct LevelLess {
  bool operator()(const LevelVec& a, const LevelVec& b) const {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
  }
};

struct LevelHash {
  std::size_t operator()(const LevelVec& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= std::size_t(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct LevelEq {
  bool operator()(const LevelVec& a, const LevelVec& b) const {
    return same_entries(a, b);
  }
};

}  // namespace weylfold

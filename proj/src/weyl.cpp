#include "rootsmith/weyl.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace rootsmith::weyl {

namespace {

void check_degree(const RootSystem& rs, const GroupElement& w) {
  if (w.degree() != rs.root_count())
    throw std::invalid_argument("parent mismatch");
}

std::string encode(const GroupElement& w) {
  std::string key(w.perm.size(), '\0');
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    key[i] = static_cast<char>(static_cast<unsigned char>(w.perm[i]));
  return key;
}

// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
// Entries stay equal to minors of the input, which fit comfortably in 64
// bits for ranks <= 8 with single-digit root coefficients.
int rank_int64(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

GroupElement identity(const RootSystem& rs) {
  GroupElement w;
  w.perm.resize(rs.root_count());
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

bool is_identity(const GroupElement& w) {
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    if (w.perm[i] != static_cast<RootIndex>(i)) return false;
  return true;
}

GroupElement reflection(const RootSystem& rs, RootIndex alpha) {
  if (alpha < 0 || static_cast<std::size_t>(alpha) >= rs.root_count())
    throw std::invalid_argument("not a root index");
  GroupElement w;
  w.perm.resize(rs.root_count());
  for (std::size_t i = 0; i < rs.root_count(); ++i)
    w.perm[i] = rs.reflect_root(alpha, static_cast<RootIndex>(i));
  return w;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("parent mismatch");
  GroupElement w;
  w.perm.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) w.perm[i] = a.perm[b.perm[i]];
  return w;
}

GroupElement inverse(const GroupElement& w) {
  GroupElement inv;
  inv.perm.resize(w.degree());
  for (std::size_t i = 0; i < w.degree(); ++i)
    inv.perm[w.perm[i]] = static_cast<RootIndex>(i);
  return inv;
}

RootCoords apply(const RootSystem& rs, const GroupElement& w,
                 const RootCoords& v) {
  check_degree(rs, w);
  if (v.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("dimension mismatch");
  RootCoords out(v.size(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (v[i] == 0) continue;
    const RootCoords& image = rs.root(w.perm[rs.simple_root(i)]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * image[j];
  }
  return out;
}

std::vector<std::vector<Coord>> matrix_of(const RootSystem& rs,
                                          const GroupElement& w) {
  check_degree(rs, w);
  const int n = rs.rank();
  std::vector<std::vector<Coord>> m(n, std::vector<Coord>(n));
  for (int j = 0; j < n; ++j) {
    const RootCoords& image = rs.root(w.perm[rs.simple_root(j)]);
    for (int i = 0; i < n; ++i) m[i][j] = image[i];
  }
  return m;
}

std::vector<RootCoords> simple_images(const RootSystem& rs,
                                      const GroupElement& w) {
  check_degree(rs, w);
  std::vector<RootCoords> images;
  images.reserve(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    images.push_back(rs.root(w.perm[rs.simple_root(i)]));
  return images;
}

GroupElement from_simple_images(const RootSystem& rs,
                                const std::vector<RootCoords>& images) {
  const int n = rs.rank();
  if (images.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected one image per simple root");
  GroupElement w;
  w.perm.resize(rs.root_count());
  std::vector<bool> hit(rs.root_count(), false);
  for (std::size_t b = 0; b < rs.root_count(); ++b) {
    const RootCoords& v = rs.root(static_cast<RootIndex>(b));
    RootCoords out(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[j] += v[i] * images[i][j];
    const auto idx = rs.root_index(out);
    if (!idx)
      throw std::invalid_argument("images do not permute the root table");
    if (hit[*idx])
      throw std::invalid_argument("images do not permute the root table");
    hit[*idx] = true;
    w.perm[b] = *idx;
  }
  return w;
}

RootSet closure_subsystem(const RootSystem& rs, const RootSet& r) {
  if (r.empty()) throw std::invalid_argument("empty root subset");
  for (const RootIndex i : r)
    if (i < 0 || static_cast<std::size_t>(i) >= rs.root_count())
      throw std::invalid_argument("not a root index");
  RootSet s(r);
  std::vector<RootIndex> items(s.begin(), s.end());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      const RootIndex t = rs.reflect_root(items[i], items[j]);
      if (s.insert(t).second) items.push_back(t);
    }
  }
  return s;
}

bool generates_oracle(const RootSystem& rs, const RootSet& r) {
  return closure_subsystem(rs, r).size() == rs.root_count();
}

int reflection_length(const RootSystem& rs, const GroupElement& w) {
  check_degree(rs, w);
  auto m = matrix_of(rs, w);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
  return rank_int64(std::move(m));
}

RootIndex conjugate_reflection(const RootSystem& rs, const GroupElement& w,
                               RootIndex alpha) {
  check_degree(rs, w);
  return rs.positive_rep(w.perm.at(alpha));
}

std::optional<std::vector<GroupElement>> group_bfs(
    const RootSystem& rs, const std::vector<GroupElement>& gens,
    std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("cap must be positive");
  for (const auto& g : gens) check_degree(rs, g);
  std::vector<GroupElement> out{identity(rs)};
  std::unordered_set<std::string> seen{encode(out.front())};
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    for (const auto& g : gens) {
      GroupElement next = compose(g, out[qi]);
      if (seen.insert(encode(next)).second) {
        if (out.size() + 1 > cap) return std::nullopt;
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::uint64_t element_order(const GroupElement& w) {
  std::uint64_t k = 1;
  GroupElement acc = w;
  while (!is_identity(acc)) {
    acc = compose(acc, w);
    ++k;
  }
  return k;
}

}  // namespace rootsmith::weyl

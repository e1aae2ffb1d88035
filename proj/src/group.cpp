#include "tensecert/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tensecert {

namespace {

std::string triple_message(const std::string& what, int a, int b, int c) {
  return what + " at triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table,
                         std::string name)
    : elements_(std::move(elements)), table_(std::move(table)), name_(std::move(name)) {
  const int n = static_cast<int>(elements_.size());
  if (n == 0) throw std::invalid_argument("group: empty element list");
  if (static_cast<int>(table_.size()) != n)
    throw std::invalid_argument("group: table row count != element count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table_[i].size()) != n)
      throw std::invalid_argument("group: table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= n)
        throw std::invalid_argument(triple_message("group: table entry out of range", i, j,
                                                   table_[i][j]));
  }

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table_[i][j]])
        throw std::invalid_argument(triple_message("group: repeated value in row", i, j,
                                                   table_[i][j]));
      row[table_[i][j]] = true;
      if (col[table_[j][i]])
        throw std::invalid_argument(triple_message("group: repeated value in column", j, i,
                                                   table_[j][i]));
      col[table_[j][i]] = true;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument(triple_message("group: associativity fails", a, b, c));

  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && table_[i][j] == j && table_[j][i] == j;
    if (ok) {
      identity_ = i;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("group: no two-sided identity");

  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] < 0)
      throw std::invalid_argument("group: element " + std::to_string(g) +
                                  " has no two-sided inverse");
  }
}

void FiniteGroup::check_index(int g) const {
  if (g < 0 || g >= order())
    throw std::out_of_range("group: element index " + std::to_string(g) + " out of range");
}

int FiniteGroup::multiply(int g, int h) const {
  check_index(g);
  check_index(h);
  return table_[g][h];
}

int FiniteGroup::inverse(int g) const {
  check_index(g);
  return inverse_[g];
}

const std::string& FiniteGroup::element_name(int g) const {
  check_index(g);
  return elements_[g];
}

int FiniteGroup::element_index(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[i] == name) return i;
  return -1;
}

Eigen::MatrixXd FiniteGroup::regular_representation(int g) const {
  check_index(g);
  const int n = order();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) r(a, table_[a][g]) = 1.0;
  return r;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return elements_ == other.elements_ && table_ == other.table_;
}

namespace {

FiniteGroup cyclic(int n) {
  std::vector<std::string> names;
  names.emplace_back("e");
  for (int a = 1; a < n; ++a) names.push_back(a == 1 ? "r" : "r" + std::to_string(a));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return {std::move(names), std::move(table), "C" + std::to_string(n)};
}

// Dihedral of order 2n; elements r^a and s r^a with s r^a s = r^-a.
FiniteGroup dihedral(int n) {
  auto enc = [n](int a, int f) { return f * n + a; };
  std::vector<std::string> names(2 * n);
  for (int a = 0; a < n; ++a) {
    names[enc(a, 0)] = a == 0 ? "e" : (a == 1 ? "r" : "r" + std::to_string(a));
    names[enc(a, 1)] = a == 0 ? "s" : (a == 1 ? "sr" : "sr" + std::to_string(a));
  }
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 2; ++f)
      for (int b = 0; b < n; ++b)
        for (int g = 0; g < 2; ++g) {
          int sign = g == 0 ? 1 : -1;
          int c = ((b + sign * a) % n + n) % n;
          table[enc(a, f)][enc(b, g)] = enc(c, f ^ g);
        }
  return {std::move(names), std::move(table), "D" + std::to_string(n)};
}

// Quaternion group {±1, ±i, ±j, ±k}: element = (axis, sign bit).
FiniteGroup quaternion8() {
  // axis 0..3 ~ 1,i,j,k; value = axis + 4*negbit
  const char* base[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names(8);
  for (int a = 0; a < 4; ++a) {
    names[a] = base[a];
    names[a + 4] = std::string("-") + base[a];
  }
  // i*j=k etc. via the structure constants of the quaternion units.
  auto unit_mul = [](int a, int b, int& axis, int& neg) {
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int ng[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    axis = ax[a][b];
    neg = ng[a][b];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int axis, neg;
      unit_mul(x % 4, y % 4, axis, neg);
      int sign = (x / 4) ^ (y / 4) ^ neg;
      table[x][y] = axis + 4 * sign;
    }
  return {std::move(names), std::move(table), "Q8"};
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric(int n) {
  auto perms = all_permutations(n);
  const int m = static_cast<int>(perms.size());
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    std::string s;
    for (int v : perms[i]) s += std::to_string(v + 1);
    names[i] = s;
  }
  auto find = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // composition acting left-to-right: (pq)(x) = p(q(x))
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = find(c);
    }
  return {std::move(names), std::move(table), "S" + std::to_string(n)};
}

}  // namespace

bool is_catalogue_group(const std::string& name) {
  if (name == "Q8" || name == "S3" || name == "S4") return true;
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'Z')) {
    int n = std::atoi(name.c_str() + 1);
    return n >= 1 && n <= 12;
  }
  if (name.size() >= 2 && name[0] == 'D') {
    int n = std::atoi(name.c_str() + 1);
    return n >= 2 && n <= 8;
  }
  return false;
}

FiniteGroup catalogue_group(const std::string& name) {
  if (!is_catalogue_group(name))
    throw std::invalid_argument("unknown catalogue group: " + name);
  if (name == "Q8") return quaternion8();
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  int n = std::atoi(name.c_str() + 1);
  if (name[0] == 'D') return dihedral(n);
  return cyclic(n);
}

FiniteGroup trivial_group() { return cyclic(1); }

}  // namespace tensecert

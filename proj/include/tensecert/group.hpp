#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace tensecert {

/// A finite group given by an explicit multiplication table over indexed
/// elements. Immutable after construction; the constructor validates that the
/// table is a Latin square, associative, and has a two-sided identity with
/// two-sided inverses.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table,
              std::string name = "");

  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }

  int multiply(int g, int h) const;
  int inverse(int g) const;

  const std::string& element_name(int g) const;
  /// Index of a named element, or -1 when absent.
  int element_index(const std::string& name) const;
  const std::vector<std::string>& elements() const { return elements_; }

  /// Right regular representation: the 0/1 matrix with entry 1 at (a, a*g).
  Eigen::MatrixXd regular_representation(int g) const;

  bool same_table(const FiniteGroup& other) const;

 private:
  void check_index(int g) const;

  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = -1;
  std::string name_;
};

/// Built-in groups: "C1".."C12" (cyclic, "Zn" accepted as alias),
/// "D2".."D8" (dihedral of order 2n), "Q8", "S3", "S4".
FiniteGroup catalogue_group(const std::string& name);

bool is_catalogue_group(const std::string& name);

FiniteGroup trivial_group();

}  // namespace tensecert

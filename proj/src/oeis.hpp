#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arith.hpp"
#include "enumerate.hpp"

namespace ppdiv {

/// Indexed integer sequence in OEIS b-file form. Index of values[i] is
/// offset + i.
struct SequenceFile {
  std::string id;
  long long offset = 1;
  std::vector<Big> values;

  bool operator==(const SequenceFile& other) const {
    return offset == other.offset && values == other.values;
  }
};

void write_bfile(const SequenceFile& seq, std::ostream& out);
void write_bfile(const SequenceFile& seq, const std::string& path);

/// Lines are "<index> <value>"; lines starting with '#' are skipped.
/// Indices must be consecutive.
SequenceFile read_bfile(std::istream& in, const std::string& id = "");
SequenceFile read_bfile(const std::string& path, const std::string& id = "");

struct CompareReport {
  bool match = true;
  long long index = 0;  // first divergence when match is false
  Big computed;
  Big reference;
};

/// Compares over the overlapping index range; throws invalid_argument when
/// the ranges are disjoint.
CompareReport compare_sequences(const SequenceFile& computed, const SequenceFile& reference);

std::string to_dot(const GenTree& tree);
void export_dot(const GenTree& tree, std::ostream& out);
void export_dot(const GenTree& tree, const std::string& path);

/// Label used in DOT output and listings: decimal for machine-word values,
/// the factored expression for giants.
std::string node_label(const TreeNode& node);

}  // namespace ppdiv

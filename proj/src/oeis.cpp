#include "oeis.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace ppdiv {

void write_bfile(const SequenceFile& seq, std::ostream& out) {
  for (std::size_t i = 0; i < seq.values.size(); ++i)
    out << (seq.offset + static_cast<long long>(i)) << ' ' << seq.values[i].get_str() << '\n';
  if (!out) throw IoError("write failed for b-file stream");
}

void write_bfile(const SequenceFile& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_bfile(seq, out);
}

SequenceFile read_bfile(std::istream& in, const std::string& id) {
  SequenceFile seq;
  seq.id = id;
  std::string line;
  long line_no = 0;
  bool have_first = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    long long index;
    std::string value_text, excess;
    if (!(fields >> index >> value_text) || (fields >> excess))
      throw ParseError("malformed b-file line " + std::to_string(line_no), line_no);
    Big value;
    try {
      value = parse_big(value_text);
    } catch (const std::invalid_argument&) {
      // negative values are legal in b-files even if our sequences never
      // produce them
      if (mpz_set_str(value.get_mpz_t(), value_text.c_str(), 10) != 0)
        throw ParseError("malformed value on b-file line " + std::to_string(line_no), line_no);
    }
    if (!have_first) {
      seq.offset = index;
      have_first = true;
    } else if (index != seq.offset + static_cast<long long>(seq.values.size())) {
      throw ParseError("non-consecutive index " + std::to_string(index) + " on line " +
                           std::to_string(line_no),
                       line_no);
    }
    seq.values.push_back(value);
  }
  return seq;
}

SequenceFile read_bfile(const std::string& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_bfile(in, id);
}

CompareReport compare_sequences(const SequenceFile& computed, const SequenceFile& reference) {
  long long lo = std::max(computed.offset, reference.offset);
  long long hi = std::min(computed.offset + static_cast<long long>(computed.values.size()),
                          reference.offset + static_cast<long long>(reference.values.size()));
  if (lo >= hi) throw std::invalid_argument("sequences have disjoint index ranges");
  CompareReport report;
  for (long long i = lo; i < hi; ++i) {
    const Big& a = computed.values[static_cast<std::size_t>(i - computed.offset)];
    const Big& b = reference.values[static_cast<std::size_t>(i - reference.offset)];
    if (a != b) {
      report.match = false;
      report.index = i;
      report.computed = a;
      report.reference = b;
      return report;
    }
  }
  return report;
}

std::string node_label(const TreeNode& node) {
  if (fits_u64(node.value)) return node.value.get_str();
  if (node.edge == EdgeKind::efp_child) return node.fact.str() + " + 1";
  return node.fact.str();
}

std::string to_dot(const GenTree& tree) {
  std::ostringstream out;
  out << "digraph gentree {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << node_label(tree.nodes[i]) << "\"];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    if (node.parent < 0) continue;
    out << "  n" << node.parent << " -> n" << i << " [label=\"" << edge_kind_name(node.edge)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void export_dot(const GenTree& tree, std::ostream& out) {
  out << to_dot(tree);
  if (!out) throw IoError("write failed for DOT stream");
}

void export_dot(const GenTree& tree, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  export_dot(tree, out);
}

}  // namespace ppdiv

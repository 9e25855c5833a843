#include "colat/dot.hpp"

#include <sstream>

namespace colat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

template <class Covers>
std::string render(std::size_t n, const std::vector<std::string>& labels, const Covers& covers) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < n; ++i) out << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
  for (auto [lo, hi] : covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const FinLattice& lattice) {
  return render(lattice.size(), lattice.labels(), lattice.covers());
}

std::string export_dot(const Poset& poset) {
  return render(poset.size(), poset.labels(), poset.covers());
}

}  // namespace colat

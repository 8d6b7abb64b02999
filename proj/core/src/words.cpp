#include "akchar/words.hpp"

#include <sstream>
#include <stdexcept>

namespace akchar {

std::string GeneratorSymbol::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kGroup:
      os << "s(" << index << ')';
      break;
    case Kind::kBraid:
      os << "g(" << index << ')';
      break;
    case Kind::kXi:
      os << "xi(" << index << ',' << power << ')';
      break;
  }
  return os.str();
}

void GeneratorWord::validate() const {
  for (const auto& sym : symbols) {
    bool ok = false;
    switch (sym.kind) {
      case GeneratorSymbol::Kind::kGroup:
        ok = sym.index >= 0 && sym.index < n;
        break;
      case GeneratorSymbol::Kind::kBraid:
        ok = sym.index >= 1 && sym.index <= n - 1;
        break;
      case GeneratorSymbol::Kind::kXi:
        ok = sym.index >= 1 && sym.index <= n && sym.power >= 1;
        break;
    }
    if (!ok) throw std::invalid_argument("GeneratorWord: " + sym.to_string() + " out of range for n=" + std::to_string(n));
  }
}

std::string GeneratorWord::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) os << ", ";
    os << symbols[i].to_string();
  }
  os << ']';
  return os.str();
}

std::vector<Block> standard_blocks(const MultiPartition& mu) {
  std::vector<Block> blocks;
  int start = 0;
  for (std::size_t r = 1; r <= mu.num_components(); ++r) {
    for (int part : mu[r].parts()) {
      blocks.push_back({static_cast<int>(r), start, part});
      start += part;
    }
  }
  return blocks;
}

GeneratorWord word_group(const MultiPartition& mu) {
  GeneratorWord w;
  w.n = mu.size();
  for (const auto& b : standard_blocks(mu)) {
    const int top = b.start + b.size;  // t_top is the block-local t_size
    for (int rep = 1; rep < b.color; ++rep) {
      for (int i = top - 1; i >= 1; --i) w.symbols.push_back(GeneratorSymbol::s(i));
      w.symbols.push_back(GeneratorSymbol::s(0));
      for (int i = 1; i <= top - 1; ++i) w.symbols.push_back(GeneratorSymbol::s(i));
    }
    for (int i = top - 1; i >= b.start + 1; --i) w.symbols.push_back(GeneratorSymbol::s(i));
  }
  return w;
}

GeneratorWord word_hecke(const MultiPartition& mu) {
  GeneratorWord w;
  w.n = mu.size();
  for (const auto& b : standard_blocks(mu)) {
    const int top = b.start + b.size;
    if (b.color > 1) w.symbols.push_back(GeneratorSymbol::xi(top, b.color - 1));
    for (int i = top - 1; i >= b.start + 1; --i) w.symbols.push_back(GeneratorSymbol::g(i));
  }
  return w;
}

}  // namespace akchar

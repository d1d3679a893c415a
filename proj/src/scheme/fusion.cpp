#include "asx/scheme/fusion.hpp"

#include <algorithm>
#include <charconv>

namespace asx {

FusionPartition FusionPartition::parse(std::string_view text) {
  FusionPartition p;
  std::vector<int> block;
  std::size_t pos = 0;
  bool expect_number = true;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::InvalidPartition, msg + " at position " + std::to_string(pos) + " in '" +
                                                 std::string(text) + "'");
  };
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t') {
      ++pos;
      continue;
    }
    if (expect_number) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc() || ptr == text.data() + pos) fail("expected a class index");
      block.push_back(v);
      pos = ptr - text.data();
      expect_number = false;
    } else if (ch == ',') {
      expect_number = true;
      ++pos;
    } else if (ch == '|') {
      p.blocks.push_back(std::move(block));
      block.clear();
      expect_number = true;
      ++pos;
    } else {
      fail("unexpected character");
    }
  }
  if (expect_number) fail("dangling separator");
  p.blocks.push_back(std::move(block));
  return p;
}

FusionPartition FusionPartition::singletons(int d) {
  FusionPartition p;
  for (int i = 0; i <= d; ++i) p.blocks.push_back({i});
  return p;
}

void FusionPartition::validate(int d) const {
  if (blocks.empty() || blocks[0] != std::vector<int>{0}) {
    throw Error(ErrorKind::InvalidPartition, "the first block must be exactly {0}: " + to_string());
  }
  std::vector<bool> seen(d + 1, false);
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::InvalidPartition, "empty block in " + to_string());
    for (int v : b) {
      if (v < 0 || v > d) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(v) + " out of range");
      if (seen[v]) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::InvalidPartition, "blocks do not cover 0.." + std::to_string(d));
  }
}

std::string FusionPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += "|";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

}  // namespace asx

// Bi-twist class counts per ramification row over a few small fields.
#include <cstdio>

#include "cubica/bitwist.hpp"

using namespace cubica;

int main() {
  struct Row {
    Family fam;
    const char* field;
  };
  const Row rows[] = {{Family::R33, "5"},        {Family::R322, "7"},       {Family::R3322, "11"},
                      {Family::R32_char2, "4"},  {Family::R332_char2, "4"}, {Family::R33_char2_AS, "2"}};
  int bad = 0;
  std::printf("%-14s %-6s %-8s %s\n", "family", "field", "classes", "expected");
  for (const auto& [fam, name] : rows) {
    Field F = Field::parse(name);
    auto cls = enumerate_classes(fam, F);
    long long want = class_count(fam, static_cast<long long>(F.size()));
    std::printf("%-14s %-6s %-8zu %lld\n", family_name(fam).c_str(), name, cls.size(), want);
    if (static_cast<long long>(cls.size()) != want) ++bad;
  }
  return bad ? 1 : 0;
}

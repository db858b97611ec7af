// Acceptance harness: one pass/fail line per criterion. Populated as modules land.
#include <cstdio>

int main() {
  std::printf("acceptance: no criteria wired yet\n");
  return 1;
}

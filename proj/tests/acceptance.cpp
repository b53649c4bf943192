// Acceptance suite: one line per criterion. Filled in alongside the CLI.
#include <iostream>

int main() {
  std::cout << "acceptance placeholder\n";
  return 1;
}

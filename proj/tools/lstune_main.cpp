#include <iostream>

int main() {
  std::cout << "lstune: not wired up yet\n";
  return 0;
}

#include <iostream>

int main() {
    std::cout << "spantree: placeholder\n";
    return 0;
}

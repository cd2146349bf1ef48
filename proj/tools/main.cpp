#include <cstdio>
int main() { std::puts("secolor placeholder"); return 0; }

#include "qps/gf.hpp"
int main() { qps::Field f(3, 0b1011); return f.n() == 3 ? 0 : 1; }

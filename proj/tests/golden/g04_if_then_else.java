void f(boolean c, int y) { if (c) { y = 1; } else { y = 2; } }

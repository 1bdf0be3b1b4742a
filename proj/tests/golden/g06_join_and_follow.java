void f(boolean c, String s) { int a = 0; if (c) { a = 1; } int b = a; }

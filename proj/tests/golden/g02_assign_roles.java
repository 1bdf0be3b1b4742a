void f(int b) { int a; a = b; }

void f(int a, int n) { while (a < n) { a = a + 1; } }

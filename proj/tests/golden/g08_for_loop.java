void f(int n) { int s = 0; for (int i = 0; i < n; i++) { s = s + i; } int t = s; }

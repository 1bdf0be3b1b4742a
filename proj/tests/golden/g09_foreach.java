void f(List ys, int s) { for (Object x : ys) { s = s + 1; } }

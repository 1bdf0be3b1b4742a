void f(Service a, int b) { a.m(b); }

// placeholder, filled in once the library is complete
int main() { return 0; }

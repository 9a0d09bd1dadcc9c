#include <cstdio>

int main() {
    std::puts("lrslab: CLI not wired up yet");
    return 1;
}

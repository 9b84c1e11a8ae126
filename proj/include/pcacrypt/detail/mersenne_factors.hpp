#pragma once

// Prime factorizations of 2^d - 1 for d = 1..128 (Cunningham table), one row
// per prime power, rows grouped by ascending d. Primes are split into high and
// low 64-bit halves.

#include <array>
#include <cstdint>

namespace pcacrypt::gf2::detail {

struct MersenneFactor {
    unsigned degree;
    std::uint64_t hi;
    std::uint64_t lo;
    unsigned exponent;
};

inline constexpr unsigned kMaxFactoredDegree = 128;

inline constexpr std::array<MersenneFactor, 662> kMersenneFactors = {{
    {2, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {3, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {4, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {4, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {5, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {6, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {6, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {7, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {8, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {8, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {8, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {9, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {9, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {10, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {10, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {10, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {11, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {11, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {12, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {12, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {12, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {12, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {13, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {14, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {14, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {14, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {15, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {15, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {15, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {16, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {16, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {16, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {16, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {17, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {18, 0x0000000000000000ULL, 0x0000000000000003ULL, 3},
    {18, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {18, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {18, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {19, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {20, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {20, 0x0000000000000000ULL, 0x0000000000000005ULL, 2},
    {20, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {20, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {20, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {21, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {21, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {21, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {22, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {22, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {22, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {22, 0x0000000000000000ULL, 0x00000000000002abULL, 1},
    {23, 0x0000000000000000ULL, 0x000000000000002fULL, 1},
    {23, 0x0000000000000000ULL, 0x000000000002b931ULL, 1},
    {24, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {24, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {24, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {24, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {24, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {24, 0x0000000000000000ULL, 0x00000000000000f1ULL, 1},
    {25, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {25, 0x0000000000000000ULL, 0x0000000000000259ULL, 1},
    {25, 0x0000000000000000ULL, 0x0000000000000709ULL, 1},
    {26, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {26, 0x0000000000000000ULL, 0x0000000000000aabULL, 1},
    {26, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {27, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {27, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {27, 0x0000000000000000ULL, 0x0000000000040201ULL, 1},
    {28, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {28, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {28, 0x0000000000000000ULL, 0x000000000000001dULL, 1},
    {28, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {28, 0x0000000000000000ULL, 0x0000000000000071ULL, 1},
    {28, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {29, 0x0000000000000000ULL, 0x00000000000000e9ULL, 1},
    {29, 0x0000000000000000ULL, 0x000000000000044fULL, 1},
    {29, 0x0000000000000000ULL, 0x0000000000000829ULL, 1},
    {30, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {30, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {30, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {30, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {30, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {30, 0x0000000000000000ULL, 0x000000000000014bULL, 1},
    {31, 0x0000000000000000ULL, 0x000000007fffffffULL, 1},
    {32, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {32, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {32, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {32, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {32, 0x0000000000000000ULL, 0x0000000000010001ULL, 1},
    {33, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {33, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {33, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {33, 0x0000000000000000ULL, 0x00000000000925b7ULL, 1},
    {34, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {34, 0x0000000000000000ULL, 0x000000000000aaabULL, 1},
    {34, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {35, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {35, 0x0000000000000000ULL, 0x0000000000000047ULL, 1},
    {35, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {35, 0x0000000000000000ULL, 0x000000000001e029ULL, 1},
    {36, 0x0000000000000000ULL, 0x0000000000000003ULL, 3},
    {36, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {36, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {36, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {36, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {36, 0x0000000000000000ULL, 0x0000000000000025ULL, 1},
    {36, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {36, 0x0000000000000000ULL, 0x000000000000006dULL, 1},
    {37, 0x0000000000000000ULL, 0x00000000000000dfULL, 1},
    {37, 0x0000000000000000ULL, 0x0000000024bc44e1ULL, 1},
    {38, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {38, 0x0000000000000000ULL, 0x000000000002aaabULL, 1},
    {38, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {39, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {39, 0x0000000000000000ULL, 0x000000000000004fULL, 1},
    {39, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {39, 0x0000000000000000ULL, 0x000000000001da19ULL, 1},
    {40, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {40, 0x0000000000000000ULL, 0x0000000000000005ULL, 2},
    {40, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {40, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {40, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {40, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {40, 0x0000000000000000ULL, 0x000000000000f0f1ULL, 1},
    {41, 0x0000000000000000ULL, 0x0000000000003437ULL, 1},
    {41, 0x0000000000000000ULL, 0x0000000009ce3e79ULL, 1},
    {42, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {42, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {42, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {42, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {42, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {42, 0x0000000000000000ULL, 0x000000000000152bULL, 1},
    {43, 0x0000000000000000ULL, 0x00000000000001afULL, 1},
    {43, 0x0000000000000000ULL, 0x00000000000025f7ULL, 1},
    {43, 0x0000000000000000ULL, 0x0000000000200a97ULL, 1},
    {44, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {44, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {44, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {44, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {44, 0x0000000000000000ULL, 0x000000000000018dULL, 1},
    {44, 0x0000000000000000ULL, 0x00000000000002abULL, 1},
    {44, 0x0000000000000000ULL, 0x0000000000000841ULL, 1},
    {45, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {45, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {45, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {45, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {45, 0x0000000000000000ULL, 0x0000000000000277ULL, 1},
    {45, 0x0000000000000000ULL, 0x0000000000005b0fULL, 1},
    {46, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {46, 0x0000000000000000ULL, 0x000000000000002fULL, 1},
    {46, 0x0000000000000000ULL, 0x000000000002b931ULL, 1},
    {46, 0x0000000000000000ULL, 0x00000000002aaaabULL, 1},
    {47, 0x0000000000000000ULL, 0x000000000000092fULL, 1},
    {47, 0x0000000000000000ULL, 0x00000000000011a1ULL, 1},
    {47, 0x0000000000000000ULL, 0x0000000000ca6691ULL, 1},
    {48, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {48, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {48, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {48, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {48, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {48, 0x0000000000000000ULL, 0x0000000000000061ULL, 1},
    {48, 0x0000000000000000ULL, 0x00000000000000f1ULL, 1},
    {48, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {48, 0x0000000000000000ULL, 0x00000000000002a1ULL, 1},
    {49, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {49, 0x0000000000000000ULL, 0x0000040810204081ULL, 1},
    {50, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {50, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {50, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {50, 0x0000000000000000ULL, 0x00000000000000fbULL, 1},
    {50, 0x0000000000000000ULL, 0x0000000000000259ULL, 1},
    {50, 0x0000000000000000ULL, 0x0000000000000709ULL, 1},
    {50, 0x0000000000000000ULL, 0x0000000000000fd3ULL, 1},
    {51, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {51, 0x0000000000000000ULL, 0x0000000000000067ULL, 1},
    {51, 0x0000000000000000ULL, 0x000000000000085fULL, 1},
    {51, 0x0000000000000000ULL, 0x0000000000002b6fULL, 1},
    {51, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {52, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {52, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {52, 0x0000000000000000ULL, 0x0000000000000035ULL, 1},
    {52, 0x0000000000000000ULL, 0x000000000000009dULL, 1},
    {52, 0x0000000000000000ULL, 0x000000000000064dULL, 1},
    {52, 0x0000000000000000ULL, 0x0000000000000aabULL, 1},
    {52, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {53, 0x0000000000000000ULL, 0x00000000000018d9ULL, 1},
    {53, 0x0000000000000000ULL, 0x0000000000010f37ULL, 1},
    {53, 0x0000000000000000ULL, 0x00000000013731a1ULL, 1},
    {54, 0x0000000000000000ULL, 0x0000000000000003ULL, 4},
    {54, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {54, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {54, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {54, 0x0000000000000000ULL, 0x00000000000154abULL, 1},
    {54, 0x0000000000000000ULL, 0x0000000000040201ULL, 1},
    {55, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {55, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {55, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {55, 0x0000000000000000ULL, 0x0000000000000371ULL, 1},
    {55, 0x0000000000000000ULL, 0x0000000000000c77ULL, 1},
    {55, 0x0000000000000000ULL, 0x00000000000314e9ULL, 1},
    {56, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {56, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {56, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {56, 0x0000000000000000ULL, 0x000000000000001dULL, 1},
    {56, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {56, 0x0000000000000000ULL, 0x0000000000000071ULL, 1},
    {56, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {56, 0x0000000000000000ULL, 0x0000000000f0f0f1ULL, 1},
    {57, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {57, 0x0000000000000000ULL, 0x0000000000007e79ULL, 1},
    {57, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {57, 0x0000000000000000ULL, 0x00000000001281afULL, 1},
    {58, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {58, 0x0000000000000000ULL, 0x000000000000003bULL, 1},
    {58, 0x0000000000000000ULL, 0x00000000000000e9ULL, 1},
    {58, 0x0000000000000000ULL, 0x000000000000044fULL, 1},
    {58, 0x0000000000000000ULL, 0x0000000000000829ULL, 1},
    {58, 0x0000000000000000ULL, 0x00000000002e4851ULL, 1},
    {59, 0x0000000000000000ULL, 0x000000000002beefULL, 1},
    {59, 0x0000000000000000ULL, 0x000002e9db69cff1ULL, 1},
    {60, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {60, 0x0000000000000000ULL, 0x0000000000000005ULL, 2},
    {60, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {60, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {60, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {60, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {60, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {60, 0x0000000000000000ULL, 0x000000000000003dULL, 1},
    {60, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {60, 0x0000000000000000ULL, 0x000000000000014bULL, 1},
    {60, 0x0000000000000000ULL, 0x0000000000000529ULL, 1},
    {61, 0x0000000000000000ULL, 0x1fffffffffffffffULL, 1},
    {62, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {62, 0x0000000000000000ULL, 0x000000002aaaaaabULL, 1},
    {62, 0x0000000000000000ULL, 0x000000007fffffffULL, 1},
    {63, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {63, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {63, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {63, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {63, 0x0000000000000000ULL, 0x0000000000016a41ULL, 1},
    {63, 0x0000000000000000ULL, 0x000000000009e9b9ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000000281ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000010001ULL, 1},
    {64, 0x0000000000000000ULL, 0x0000000000663d81ULL, 1},
    {65, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {65, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {65, 0x0000000000000000ULL, 0x00008425296b5bdfULL, 1},
    {66, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {66, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {66, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {66, 0x0000000000000000ULL, 0x0000000000000043ULL, 1},
    {66, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {66, 0x0000000000000000ULL, 0x00000000000002abULL, 1},
    {66, 0x0000000000000000ULL, 0x0000000000005179ULL, 1},
    {66, 0x0000000000000000ULL, 0x00000000000925b7ULL, 1},
    {67, 0x0000000000000000ULL, 0x000000000b8bbec9ULL, 1},
    {67, 0x0000000000000000ULL, 0x000000b161194487ULL, 1},
    {68, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {68, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {68, 0x0000000000000000ULL, 0x0000000000000089ULL, 1},
    {68, 0x0000000000000000ULL, 0x00000000000003b9ULL, 1},
    {68, 0x0000000000000000ULL, 0x00000000000066cdULL, 1},
    {68, 0x0000000000000000ULL, 0x000000000000aaabULL, 1},
    {68, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {69, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {69, 0x0000000000000000ULL, 0x000000000000002fULL, 1},
    {69, 0x0000000000000000ULL, 0x000000000002b931ULL, 1},
    {69, 0x0000000000000000ULL, 0x00000924925b6db7ULL, 1},
    {70, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {70, 0x0000000000000000ULL, 0x0000000000000047ULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {70, 0x0000000000000000ULL, 0x0000000000000119ULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000001509bULL, 1},
    {70, 0x0000000000000000ULL, 0x000000000001e029ULL, 1},
    {71, 0x0000000000000000ULL, 0x0000000000037c7fULL, 1},
    {71, 0x0000000000000000ULL, 0x0000000002e4b979ULL, 1},
    {71, 0x0000000000000000ULL, 0x000000000cb06149ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000003ULL, 3},
    {72, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {72, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000025ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {72, 0x0000000000000000ULL, 0x000000000000006dULL, 1},
    {72, 0x0000000000000000ULL, 0x00000000000000f1ULL, 1},
    {72, 0x0000000000000000ULL, 0x00000000000001b1ULL, 1},
    {72, 0x0000000000000000ULL, 0x0000000000009751ULL, 1},
    {73, 0x0000000000000000ULL, 0x00000000000001b7ULL, 1},
    {73, 0x0000000000000000ULL, 0x00000000002310b9ULL, 1},
    {73, 0x0000000000000000ULL, 0x00000883c1153d41ULL, 1},
    {74, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {74, 0x0000000000000000ULL, 0x00000000000000dfULL, 1},
    {74, 0x0000000000000000ULL, 0x00000000000006f1ULL, 1},
    {74, 0x0000000000000000ULL, 0x000000000189635bULL, 1},
    {74, 0x0000000000000000ULL, 0x0000000024bc44e1ULL, 1},
    {75, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {75, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {75, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {75, 0x0000000000000000ULL, 0x0000000000000259ULL, 1},
    {75, 0x0000000000000000ULL, 0x0000000000000709ULL, 1},
    {75, 0x0000000000000000ULL, 0x00000000000189c1ULL, 1},
    {75, 0x0000000000000000ULL, 0x0000000000a13e21ULL, 1},
    {76, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {76, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {76, 0x0000000000000000ULL, 0x00000000000000e5ULL, 1},
    {76, 0x0000000000000000ULL, 0x00000000000001c9ULL, 1},
    {76, 0x0000000000000000ULL, 0x000000000002aaabULL, 1},
    {76, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {76, 0x0000000000000000ULL, 0x0000000000080401ULL, 1},
    {77, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {77, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {77, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {77, 0x0000000000000000ULL, 0x08112264cd9bb77fULL, 1},
    {78, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {78, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {78, 0x0000000000000000ULL, 0x000000000000004fULL, 1},
    {78, 0x0000000000000000ULL, 0x0000000000000aabULL, 1},
    {78, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {78, 0x0000000000000000ULL, 0x000000000001da19ULL, 1},
    {78, 0x0000000000000000ULL, 0x0000000001554aabULL, 1},
    {79, 0x0000000000000000ULL, 0x0000000000000a7fULL, 1},
    {79, 0x0000000000000000ULL, 0x000000000c0aba87ULL, 1},
    {79, 0x0000000000000000ULL, 0x00000103413e6cb7ULL, 1},
    {80, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {80, 0x0000000000000000ULL, 0x0000000000000005ULL, 2},
    {80, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {80, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {80, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {80, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {80, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {80, 0x0000000000000000ULL, 0x000000000000f0f1ULL, 1},
    {80, 0x0000000000000000ULL, 0x00000000ff00ff01ULL, 1},
    {81, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {81, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {81, 0x0000000000000000ULL, 0x0000000000000a21ULL, 1},
    {81, 0x0000000000000000ULL, 0x00000000000115cfULL, 1},
    {81, 0x0000000000000000ULL, 0x0000000000040201ULL, 1},
    {81, 0x0000000000000000ULL, 0x0000000005d2914fULL, 1},
    {82, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {82, 0x0000000000000000ULL, 0x0000000000000053ULL, 1},
    {82, 0x0000000000000000ULL, 0x0000000000003437ULL, 1},
    {82, 0x0000000000000000ULL, 0x0000000009ce3e79ULL, 1},
    {82, 0x0000000000000000ULL, 0x000000020e64c149ULL, 1},
    {83, 0x0000000000000000ULL, 0x00000000000000a7ULL, 1},
    {83, 0x0000000000000c43ULL, 0x72f855d824ca58e9ULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {84, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {84, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {84, 0x0000000000000000ULL, 0x000000000000001dULL, 1},
    {84, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000000071ULL, 1},
    {84, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000000595ULL, 1},
    {84, 0x0000000000000000ULL, 0x000000000000152bULL, 1},
    {84, 0x0000000000000000ULL, 0x0000000000003871ULL, 1},
    {85, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {85, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {85, 0x0000000000000000ULL, 0x84214a52b5ad7bdfULL, 1},
    {86, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {86, 0x0000000000000000ULL, 0x00000000000001afULL, 1},
    {86, 0x0000000000000000ULL, 0x00000000000025f7ULL, 1},
    {86, 0x0000000000000000ULL, 0x0000000000200a97ULL, 1},
    {86, 0x0000000000000000ULL, 0x000002aaaaaaaaabULL, 1},
    {87, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {87, 0x0000000000000000ULL, 0x00000000000000e9ULL, 1},
    {87, 0x0000000000000000ULL, 0x000000000000044fULL, 1},
    {87, 0x0000000000000000ULL, 0x0000000000000829ULL, 1},
    {87, 0x0000000000000000ULL, 0x0000000000001051ULL, 1},
    {87, 0x0000000000000000ULL, 0x000008f72eebe387ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000161ULL, 1},
    {88, 0x0000000000000000ULL, 0x000000000000018dULL, 1},
    {88, 0x0000000000000000ULL, 0x00000000000002abULL, 1},
    {88, 0x0000000000000000ULL, 0x0000000000000841ULL, 1},
    {88, 0x0000000000000000ULL, 0x00000000aebbc991ULL, 1},
    {89, 0x0000000001ffffffULL, 0xffffffffffffffffULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000000003ULL, 3},
    {90, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {90, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {90, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {90, 0x0000000000000000ULL, 0x000000000000014bULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000000277ULL, 1},
    {90, 0x0000000000000000ULL, 0x0000000000005b0fULL, 1},
    {90, 0x0000000000000000ULL, 0x00000000011f6e09ULL, 1},
    {91, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {91, 0x0000000000000000ULL, 0x000000000000038fULL, 1},
    {91, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {91, 0x0000000000000000ULL, 0x0000000006babc21ULL, 1},
    {91, 0x0000000000000000ULL, 0x00000005634792f1ULL, 1},
    {92, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {92, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {92, 0x0000000000000000ULL, 0x000000000000002fULL, 1},
    {92, 0x0000000000000000ULL, 0x0000000000000115ULL, 1},
    {92, 0x0000000000000000ULL, 0x00000000000003f5ULL, 1},
    {92, 0x0000000000000000ULL, 0x0000000000000679ULL, 1},
    {92, 0x0000000000000000ULL, 0x000000000000763dULL, 1},
    {92, 0x0000000000000000ULL, 0x000000000002b931ULL, 1},
    {92, 0x0000000000000000ULL, 0x00000000002aaaabULL, 1},
    {93, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {93, 0x0000000000000000ULL, 0x000000007fffffffULL, 1},
    {93, 0x0000000000000000ULL, 0x0924924936db6db7ULL, 1},
    {94, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {94, 0x0000000000000000ULL, 0x000000000000011bULL, 1},
    {94, 0x0000000000000000ULL, 0x000000000000092fULL, 1},
    {94, 0x0000000000000000ULL, 0x00000000000011a1ULL, 1},
    {94, 0x0000000000000000ULL, 0x0000000000ca6691ULL, 1},
    {94, 0x0000000000000000ULL, 0x00000026989325b1ULL, 1},
    {95, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {95, 0x0000000000000000ULL, 0x00000000000000bfULL, 1},
    {95, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {95, 0x0000000000000000ULL, 0x00000000191492ffULL, 1},
    {95, 0x0000000000000000ULL, 0x000000070fa3a01fULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {96, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {96, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000000061ULL, 1},
    {96, 0x0000000000000000ULL, 0x00000000000000c1ULL, 1},
    {96, 0x0000000000000000ULL, 0x00000000000000f1ULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {96, 0x0000000000000000ULL, 0x00000000000002a1ULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000000010001ULL, 1},
    {96, 0x0000000000000000ULL, 0x0000000001538f41ULL, 1},
    {97, 0x0000000000000000ULL, 0x0000000000002cb7ULL, 1},
    {97, 0x00000000000b7349ULL, 0x3decfd9b68318ef9ULL, 1},
    {98, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {98, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {98, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {98, 0x0000000000000000ULL, 0x000003f80fe03f81ULL, 1},
    {98, 0x0000000000000000ULL, 0x0000040810204081ULL, 1},
    {99, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {99, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {99, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {99, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {99, 0x0000000000000000ULL, 0x00000000000000c7ULL, 1},
    {99, 0x0000000000000000ULL, 0x0000000000025831ULL, 1},
    {99, 0x0000000000000000ULL, 0x00000000000925b7ULL, 1},
    {99, 0x0000000000000000ULL, 0x00000007b2661a6fULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000005ULL, 3},
    {100, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {100, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000065ULL, 1},
    {100, 0x0000000000000000ULL, 0x00000000000000fbULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000259ULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000709ULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000000fd3ULL, 1},
    {100, 0x0000000000000000ULL, 0x0000000000001fa5ULL, 1},
    {100, 0x0000000000000000ULL, 0x00000000000418d5ULL, 1},
    {101, 0x0000000000000000ULL, 0x000006c279f03a0fULL, 1},
    {101, 0x0000000000000000ULL, 0x04bbe4964e1a8b11ULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {102, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000000067ULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000000133ULL, 1},
    {102, 0x0000000000000000ULL, 0x000000000000085fULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000000b29ULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000001981ULL, 1},
    {102, 0x0000000000000000ULL, 0x0000000000002b6fULL, 1},
    {102, 0x0000000000000000ULL, 0x000000000000aaabULL, 1},
    {102, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {103, 0x0000000000000000ULL, 0x000000009800b777ULL, 1},
    {103, 0x00000000000000d7ULL, 0x9331b1cd9080adb9ULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000000035ULL, 1},
    {104, 0x0000000000000000ULL, 0x000000000000009dULL, 1},
    {104, 0x0000000000000000ULL, 0x000000000000064dULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000000aabULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {104, 0x0000000000000000ULL, 0x00000000000d1791ULL, 1},
    {104, 0x0000000000000000ULL, 0x0000000012675361ULL, 1},
    {105, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {105, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {105, 0x0000000000000000ULL, 0x0000000000000047ULL, 1},
    {105, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {105, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {105, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {105, 0x0000000000000000ULL, 0x0000000000007207ULL, 1},
    {105, 0x0000000000000000ULL, 0x000000000001a0b9ULL, 1},
    {105, 0x0000000000000000ULL, 0x000000000001e029ULL, 1},
    {105, 0x0000000000000000ULL, 0x00000000000251e9ULL, 1},
    {106, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {106, 0x0000000000000000ULL, 0x000000000000006bULL, 1},
    {106, 0x0000000000000000ULL, 0x00000000000018d9ULL, 1},
    {106, 0x0000000000000000ULL, 0x0000000000010f37ULL, 1},
    {106, 0x0000000000000000ULL, 0x00000000013731a1ULL, 1},
    {106, 0x0000000000000000ULL, 0x000019852f0d8ec1ULL, 1},
    {107, 0x000007ffffffffffULL, 0xffffffffffffffffULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000000003ULL, 4},
    {108, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {108, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000000025ULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {108, 0x0000000000000000ULL, 0x000000000000006dULL, 1},
    {108, 0x0000000000000000ULL, 0x00000000000154abULL, 1},
    {108, 0x0000000000000000ULL, 0x000000000003c1e1ULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000040201ULL, 1},
    {108, 0x0000000000000000ULL, 0x0000000000044221ULL, 1},
    {109, 0x0000000000000000ULL, 0x000000002c76e2c7ULL, 1},
    {109, 0x000000000000b83cULL, 0xbeccdc926056c109ULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {110, 0x0000000000000000ULL, 0x000000000000000bULL, 2},
    {110, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {110, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {110, 0x0000000000000000ULL, 0x00000000000002abULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000000000371ULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000000000b9bULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000000000c77ULL, 1},
    {110, 0x0000000000000000ULL, 0x00000000000314e9ULL, 1},
    {110, 0x0000000000000000ULL, 0x0000000002ea586bULL, 1},
    {111, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {111, 0x0000000000000000ULL, 0x00000000000000dfULL, 1},
    {111, 0x0000000000000000ULL, 0x000000000004e88fULL, 1},
    {111, 0x0000000000000000ULL, 0x0000000001913ca1ULL, 1},
    {111, 0x0000000000000000ULL, 0x000000001303dcb9ULL, 1},
    {111, 0x0000000000000000ULL, 0x0000000024bc44e1ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {112, 0x0000000000000000ULL, 0x000000000000001dULL, 1},
    {112, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000000071ULL, 1},
    {112, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000001421ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000000f0f0f1ULL, 1},
    {112, 0x0000000000000000ULL, 0x0000000cab258ee1ULL, 1},
    {113, 0x0000000000000000ULL, 0x0000000000000d3fULL, 1},
    {113, 0x0000000000000000ULL, 0x0000000000005aefULL, 1},
    {113, 0x0000000000000000ULL, 0x00000000000101c9ULL, 1},
    {113, 0x0000000000000000ULL, 0x00000000001c8319ULL, 1},
    {113, 0x0000000000000000ULL, 0x0003ca43f3d97c6fULL, 1},
    {114, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {114, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {114, 0x0000000000000000ULL, 0x000000000000023bULL, 1},
    {114, 0x0000000000000000ULL, 0x0000000000007e79ULL, 1},
    {114, 0x0000000000000000ULL, 0x000000000002aaabULL, 1},
    {114, 0x0000000000000000ULL, 0x000000000007ffffULL, 1},
    {114, 0x0000000000000000ULL, 0x00000000001281afULL, 1},
    {114, 0x0000000000000000ULL, 0x0000000009908251ULL, 1},
    {115, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {115, 0x0000000000000000ULL, 0x000000000000002fULL, 1},
    {115, 0x0000000000000000ULL, 0x0000000000003a67ULL, 1},
    {115, 0x0000000000000000ULL, 0x000000000002b931ULL, 1},
    {115, 0x0000000000000000ULL, 0x00000000003d9961ULL, 1},
    {115, 0x0000000000000000ULL, 0x000966fc18022f69ULL, 1},
    {116, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {116, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {116, 0x0000000000000000ULL, 0x000000000000003bULL, 1},
    {116, 0x0000000000000000ULL, 0x00000000000000e9ULL, 1},
    {116, 0x0000000000000000ULL, 0x000000000000044fULL, 1},
    {116, 0x0000000000000000ULL, 0x0000000000000829ULL, 1},
    {116, 0x0000000000000000ULL, 0x00000000002e4851ULL, 1},
    {116, 0x0000000000000000ULL, 0x0000000006664ccdULL, 1},
    {116, 0x0000000000000000ULL, 0x0000000020008001ULL, 1},
    {117, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {117, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {117, 0x0000000000000000ULL, 0x000000000000004fULL, 1},
    {117, 0x0000000000000000ULL, 0x00000000000003a9ULL, 1},
    {117, 0x0000000000000000ULL, 0x0000000000001999ULL, 1},
    {117, 0x0000000000000000ULL, 0x0000000000001fffULL, 1},
    {117, 0x0000000000000000ULL, 0x0000000000015061ULL, 1},
    {117, 0x0000000000000000ULL, 0x000000000001da19ULL, 1},
    {117, 0x0000000000000000ULL, 0x00000001d2b61f99ULL, 1},
    {118, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {118, 0x0000000000000000ULL, 0x0000000000000b11ULL, 1},
    {118, 0x0000000000000000ULL, 0x0000000000009133ULL, 1},
    {118, 0x0000000000000000ULL, 0x000000000002beefULL, 1},
    {118, 0x0000000000000000ULL, 0x000000006cc31c19ULL, 1},
    {118, 0x0000000000000000ULL, 0x000002e9db69cff1ULL, 1},
    {119, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {119, 0x0000000000000000ULL, 0x00000000000000efULL, 1},
    {119, 0x0000000000000000ULL, 0x0000000000004f07ULL, 1},
    {119, 0x0000000000000000ULL, 0x000000000001ffffULL, 1},
    {119, 0x0000000000000000ULL, 0x0000000eaa150cafULL, 1},
    {119, 0x0000000000000000ULL, 0x0000001e867bff69ULL, 1},
    {120, 0x0000000000000000ULL, 0x0000000000000003ULL, 2},
    {120, 0x0000000000000000ULL, 0x0000000000000005ULL, 2},
    {120, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000000bULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000000dULL, 1},
    {120, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {120, 0x0000000000000000ULL, 0x0000000000000029ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000003dULL, 1},
    {120, 0x0000000000000000ULL, 0x0000000000000097ULL, 1},
    {120, 0x0000000000000000ULL, 0x00000000000000f1ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000014bULL, 1},
    {120, 0x0000000000000000ULL, 0x0000000000000529ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000000000f0f1ULL, 1},
    {120, 0x0000000000000000ULL, 0x000000010feef011ULL, 1},
    {121, 0x0000000000000000ULL, 0x0000000000000017ULL, 1},
    {121, 0x0000000000000000ULL, 0x0000000000000059ULL, 1},
    {121, 0x0000000000000000ULL, 0x00000000000002d7ULL, 1},
    {121, 0x000000168c2661efULL, 0xceb3c3748ef748e7ULL, 1},
    {122, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {122, 0x0000000000000000ULL, 0x0aaaaaaaaaaaaaabULL, 1},
    {122, 0x0000000000000000ULL, 0x1fffffffffffffffULL, 1},
    {123, 0x0000000000000000ULL, 0x0000000000000007ULL, 1},
    {123, 0x0000000000000000ULL, 0x0000000000003437ULL, 1},
    {123, 0x0000000000000000ULL, 0x00000000003b4fc7ULL, 1},
    {123, 0x0000000000000000ULL, 0x0000000009ce3e79ULL, 1},
    {123, 0x0000000000000000ULL, 0x02776572c79ed291ULL, 1},
    {124, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {124, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {124, 0x0000000000000000ULL, 0x00000000000015cdULL, 1},
    {124, 0x0000000000000000ULL, 0x00000000000021e9ULL, 1},
    {124, 0x0000000000000000ULL, 0x000000000000c145ULL, 1},
    {124, 0x0000000000000000ULL, 0x000000000005df05ULL, 1},
    {124, 0x0000000000000000ULL, 0x000000002aaaaaabULL, 1},
    {124, 0x0000000000000000ULL, 0x000000007fffffffULL, 1},
    {125, 0x0000000000000000ULL, 0x000000000000001fULL, 1},
    {125, 0x0000000000000000ULL, 0x0000000000000259ULL, 1},
    {125, 0x0000000000000000ULL, 0x0000000000000709ULL, 1},
    {125, 0x0000000000000000ULL, 0x0000003ea70096b1ULL, 1},
    {125, 0x0000000000000000ULL, 0x41606b48636df251ULL, 1},
    {126, 0x0000000000000000ULL, 0x0000000000000003ULL, 3},
    {126, 0x0000000000000000ULL, 0x0000000000000007ULL, 2},
    {126, 0x0000000000000000ULL, 0x0000000000000013ULL, 1},
    {126, 0x0000000000000000ULL, 0x000000000000002bULL, 1},
    {126, 0x0000000000000000ULL, 0x0000000000000049ULL, 1},
    {126, 0x0000000000000000ULL, 0x000000000000007fULL, 1},
    {126, 0x0000000000000000ULL, 0x0000000000000151ULL, 1},
    {126, 0x0000000000000000ULL, 0x000000000000152bULL, 1},
    {126, 0x0000000000000000ULL, 0x0000000000016a41ULL, 1},
    {126, 0x0000000000000000ULL, 0x000000000009e9b9ULL, 1},
    {126, 0x0000000000000000ULL, 0x00000011f703ee09ULL, 1},
    {127, 0x7fffffffffffffffULL, 0xffffffffffffffffULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000000003ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000000005ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000000011ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000000101ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000000281ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000010001ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000042f01ULL, 1},
    {128, 0x0000000000000000ULL, 0x0000000000663d81ULL, 1},
    {128, 0x0000000000000000ULL, 0x00003d30f19cd101ULL, 1},
}};

} // namespace pcacrypt::gf2::detail

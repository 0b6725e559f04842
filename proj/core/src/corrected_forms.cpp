// Machine-expanded corrected closed forms (see laguerre_freud.cpp for use sites).
#include "lfortho/corrected.hpp"

namespace lfortho::corrected {

real f22_p1_num(const real& n, const real& a1, const real& a2, const real& b1, const real& b2, const real& eta, const real& bm1, const real& b0, const real& bp1, const real& bp2, const real& g0, const real& gp1, const real& gp2) {
    const real x0 = (a1 * eta);
    const real x1 = (a2 * eta);
    const real x2 = (b1 * eta);
    const real x3 = (b2 * eta);
    const real x4 = (bp1 * eta);
    const real x5 = (real(2) * n);
    const real x6 = (eta * x5);
    const real x7 = (eta * eta);
    const real x8 = (eta * gp1);
    const real x9 = (gp2 * x8);
    const real x10 = (eta * eta * eta * eta);
    const real x11 = (a1 * x10);
    const real x12 = (a2 * x10);
    const real x13 = (bp1 * x10);
    const real x14 = (eta * eta * eta);
    const real x15 = (gp2 * x14);
    const real x16 = (gp1 * gp1);
    const real x17 = (gp1 * x0);
    const real x18 = (gp1 * x1);
    const real x19 = (b0 * gp1);
    const real x20 = (x19 * x2);
    const real x21 = (x19 * x3);
    const real x22 = (gp1 * x4);
    const real x23 = (b2 * gp1 * x2);
    const real x24 = (gp1 * x2);
    const real x25 = (bp1 * x24);
    const real x26 = (gp1 * x3);
    const real x27 = (bp1 * x26);
    const real x28 = (a1 * x14);
    const real x29 = (a2 * x28);
    const real x30 = (b1 * x28);
    const real x31 = (b2 * x28);
    const real x32 = (a1 * x7);
    const real x33 = (gp2 * x32);
    const real x34 = (a2 * x14);
    const real x35 = (b1 * x34);
    const real x36 = (b2 * x34);
    const real x37 = (a2 * x7);
    const real x38 = (gp2 * x37);
    const real x39 = (b0 * x16);
    const real x40 = (b0 * x7);
    const real x41 = (n * x14);
    const real x42 = (b1 * b2);
    const real x43 = (bp1 * x16);
    const real x44 = (b1 * x7);
    const real x45 = (b2 * x7);
    const real x46 = (bp1 * x7);
    const real x47 = (bp1 * bp1);
    const real x48 = (x47 * x8);
    const real x49 = (n * n * n);
    const real x50 = (gp1 * x7);
    const real x51 = (real(2) * x8);
    const real x52 = (g0 * x51);
    const real x53 = (real(2) * x9);
    const real x54 = (gp1 * x6);
    const real x55 = (real(3) * n);
    const real x56 = (b0 * x17);
    const real x57 = (bp1 * x17);
    const real x58 = (b0 * x18);
    const real x59 = (bp1 * x18);
    const real x60 = (gp1 * n);
    const real x61 = (a1 * a1);
    const real x62 = (x14 * x61);
    const real x63 = (a2 * a2);
    const real x64 = (x14 * x63);
    const real x65 = (b0 * b0);
    const real x66 = (bp1 * bp1 * bp1);
    const real x67 = (n * n);
    const real x68 = (x14 * x67);
    const real x69 = (real(2) * x14);
    const real x70 = (a1 * x69);
    const real x71 = (b0 * x70);
    const real x72 = (bm1 * x70);
    const real x73 = (x28 * x5);
    const real x74 = (a2 * x69);
    const real x75 = (b0 * x74);
    const real x76 = (bm1 * x74);
    const real x77 = (x34 * x5);
    const real x78 = (b0 * x69);
    const real x79 = (real(4) * bm1);
    const real x80 = (b0 * x14);
    const real x81 = (real(4) * bp1);
    const real x82 = (real(2) * x7);
    const real x83 = (gp2 * x82);
    const real x84 = (real(2) * x15);
    const real x85 = (b1 * x69);
    const real x86 = (b2 * x69);
    const real x87 = (bp1 * x14);
    const real x88 = (bm1 * bm1);
    const real x89 = (x5 * x87);
    const real x90 = (bp1 * x32);
    const real x91 = (bp1 * x37);
    const real x92 = (b1 * b1);
    const real x93 = (b0 * x8);
    const real x94 = (b2 * b2);
    const real x95 = (n * x44);
    const real x96 = (b2 * x95);
    const real x97 = (bp1 * x45);
    const real x98 = (real(2) * bm1);
    const real x99 = (x47 * x69);
    const real x100 = ((real(1) / real(2)) * x67);
    const real x101 = (x32 * x47);
    const real x102 = (x37 * x47);
    const real x103 = (x44 * x94);
    const real x104 = (x45 * x92);
    const real x105 = (bm1 * x7);
    const real x106 = (x46 * x92);
    const real x107 = (x46 * x94);
    const real x108 = (real(3) * bp1);
    const real x109 = (n * x81);
    const real x110 = (x40 * x42);
    const real x111 = (b1 * x40);
    const real x112 = (b2 * x40);
    const real x113 = (bp1 * x5);
    const real x114 = (x40 * x5);
    const real x115 = (real(3) * x65);
    const real x116 = (x44 * x79);
    const real x117 = (b2 * x44);
    const real x118 = (x105 * x5);
    const real x119 = (n * x32);
    const real x120 = (n * x37);
    const real x121 = (real(2) * x68);
    const real x122 = (real(3) * x47);
    const real x123 = (b1 * x82);
    const real x124 = (b2 * x82);
    const real x125 = (bp1 * x82);
    const real x126 = ((real(3) / real(2)) * x47 * x7);
    const real x127 = (x44 * x67);
    const real x128 = (bm1 * x5);
    return ((real(1) / (gp1 + x0 + x1 + x6 + (real(-1) * x2) + (real(-1) * x3) + (real(-1) * x4) + (real(-1) * x7))) * ((real(-1) * x101) + (real(-1) * x102) + (real(-1) * x103) + (real(-1) * x104) + (real(-1) * x106) + (real(-1) * x107) + (real(-1) * x11) + (real(-1) * x12) + (real(-1) * x13) + (real(-1) * x15) + (real(-1) * x20) + (real(-1) * x21) + (real(-1) * x23) + (real(-1) * x25) + (real(-1) * x27) + (real(-1) * x29) + (real(-1) * x30) + (real(-1) * x31) + (real(-1) * x33) + (real(-1) * x35) + (real(-1) * x36) + (real(-1) * x38) + (real(-1) * x48) + (real(-1) * x62) + (real(-1) * x64) + (real(-1) * x68) + (real(-1) * x71) + (real(-1) * x72) + (real(-1) * x73) + (real(-1) * x75) + (real(-1) * x76) + (real(-1) * x77) + (real(-1) * x89) + (real(-1) * x9) + (real(-1) * x96) + (real(-1) * x99) + (real(-1) * (gp1 * gp1 * gp1)) + (real(-4) * x110) + (bm1 * x16) + (x7 * (bp1 * bp1 * bp1 * bp1)) + ((real(1) / real(2)) * n * x16) + (real(-1) * a1 * x121) + (real(-1) * a1 * x15) + (real(-1) * a1 * x64) + (real(-1) * a1 * x99) + (real(-1) * a2 * x11) + (real(-1) * a2 * x121) + (real(-1) * a2 * x15) + (real(-1) * a2 * x62) + (real(-1) * a2 * x71) + (real(-1) * a2 * x72) + (real(-1) * a2 * x99) + (real(-1) * b0 * x10) + (real(-1) * b0 * x22) + (real(-1) * b0 * x41) + (real(-1) * b0 * x52) + (real(-1) * b0 * x53) + (real(-1) * b0 * x68) + (real(-1) * b0 * x73) + (real(-1) * b0 * x77) + (real(-1) * b0 * x83) + (real(-1) * b0 * x84) + (real(-1) * b0 * x99) + (real(-1) * b1 * x29) + (real(-1) * b1 * x39) + (real(-1) * b1 * x43) + (real(-1) * b1 * x56) + (real(-1) * b1 * x57) + (real(-1) * b1 * x58) + (real(-1) * b1 * x59) + (real(-1) * b1 * x78) + (real(-1) * b1 * x89) + (real(-1) * b1 * x90) + (real(-1) * b1 * x91) + (real(-1) * b2 * x116) + (real(-1) * b2 * x127) + (real(-1) * b2 * x29) + (real(-1) * b2 * x39) + (real(-1) * b2 * x43) + (real(-1) * b2 * x56) + (real(-1) * b2 * x57) + (real(-1) * b2 * x58) + (real(-1) * b2 * x59) + (real(-1) * b2 * x78) + (real(-1) * b2 * x89) + (real(-1) * b2 * x90) + (real(-1) * b2 * x91) + (real(-1) * bm1 * x10) + (real(-1) * bm1 * x41) + (real(-1) * bm1 * x52) + (real(-1) * bm1 * x53) + (real(-1) * bm1 * x68) + (real(-1) * bm1 * x73) + (real(-1) * bm1 * x77) + (real(-1) * bm1 * x83) + (real(-1) * bm1 * x84) + (real(-1) * bm1 * x85) + (real(-1) * bm1 * x86) + (real(-1) * bm1 * x89) + (real(-1) * bm1 * x99) + (real(-1) * bp1 * x11) + (real(-1) * bp1 * x116) + (real(-1) * bp1 * x12) + (real(-1) * bp1 * x121) + (real(-1) * bp1 * x127) + (real(-1) * bp1 * x30) + (real(-1) * bp1 * x31) + (real(-1) * bp1 * x35) + (real(-1) * bp1 * x36) + (real(-1) * bp1 * x39) + (real(-1) * bp1 * x56) + (real(-1) * bp1 * x58) + (real(-1) * bp1 * x62) + (real(-1) * bp1 * x64) + (real(-1) * bp1 * x70) + (real(-1) * bp1 * x71) + (real(-1) * bp1 * x72) + (real(-1) * bp1 * x74) + (real(-1) * bp1 * x75) + (real(-1) * bp1 * x76) + (real(-1) * bp1 * x85) + (real(-1) * bp1 * x86) + (real(-1) * bp1 * x95) + (real(-1) * bp1 * x96) + (real(-1) * g0 * x16) + (real(-1) * g0 * x17) + (real(-1) * g0 * x18) + (real(-1) * g0 * x22) + (real(-1) * g0 * x24) + (real(-1) * g0 * x26) + (real(-1) * g0 * x50) + (real(-1) * g0 * x54) + (real(-1) * gp1 * x10) + (real(-1) * gp1 * x32) + (real(-1) * gp1 * x37) + (real(-1) * gp1 * x40) + (real(-1) * gp1 * x46) + (real(-1) * gp1 * x83) + (real(-1) * gp2 * x10) + (real(-1) * gp2 * x114) + (real(-1) * gp2 * x118) + (real(-1) * gp2 * x16) + (real(-1) * gp2 * x17) + (real(-1) * gp2 * x18) + (real(-1) * gp2 * x44) + (real(-1) * gp2 * x45) + (real(-1) * gp2 * x46) + (real(-1) * n * x101) + (real(-1) * n * x102) + (real(-1) * n * x103) + (real(-1) * n * x104) + (real(-1) * n * x106) + (real(-1) * n * x107) + (real(-1) * n * x11) + (real(-1) * n * x12) + (real(-1) * n * x126) + (real(-1) * n * x13) + (real(-1) * n * x23) + (real(-1) * n * x30) + (real(-1) * n * x31) + (real(-1) * n * x33) + (real(-1) * n * x35) + (real(-1) * n * x36) + (real(-1) * n * x38) + (real(-1) * n * x62) + (real(-1) * n * x64) + (real(-1) * n * x97) + (real(-1) * x10 * x100) + (real(-1) * x10 * x47) + (real(-1) * x100 * x16) + (real(-1) * x105 * x122) + (real(-1) * x105 * x92) + (real(-1) * x105 * x94) + (real(-1) * x108 * x117) + (real(-1) * x108 * x29) + (real(-1) * x109 * x28) + (real(-1) * x109 * x34) + (real(-1) * x110 * x5) + (real(-1) * x111 * x113) + (real(-1) * x111 * x79) + (real(-1) * x111 * x81) + (real(-1) * x112 * x113) + (real(-1) * x112 * x79) + (real(-1) * x112 * x81) + (real(-1) * x113 * x80) + (real(-1) * x114 * x47) + (real(-1) * x115 * x22) + (real(-1) * x115 * x24) + (real(-1) * x115 * x26) + (real(-1) * x117 * x128) + (real(-1) * x118 * x47) + (real(-1) * x119 * x42) + (real(-1) * x120 * x42) + (real(-1) * x122 * x40) + (real(-1) * x123 * x47) + (real(-1) * x123 * x65) + (real(-1) * x123 * x88) + (real(-1) * x124 * x47) + (real(-1) * x124 * x65) + (real(-1) * x124 * x88) + (real(-1) * x125 * x65) + (real(-1) * x125 * x88) + (real(-1) * x126 * x67) + (real(-1) * x128 * x97) + (real(-1) * x14 * x42) + (real(-1) * x14 * x49) + (real(-1) * x15 * x55) + (real(-1) * x16 * x42) + (real(-1) * x16 * x47) + (real(-1) * x16 * x6) + (real(-1) * x16 * x65) + (real(-1) * x16 * x82) + (real(-1) * x17 * x42) + (real(-1) * x17 * x47) + (real(-1) * x17 * x65) + (real(-1) * x18 * x42) + (real(-1) * x18 * x47) + (real(-1) * x18 * x65) + (real(-1) * x20 * x81) + (real(-1) * x20 * x98) + (real(-1) * x21 * x81) + (real(-1) * x21 * x98) + (real(-1) * x22 * x92) + (real(-1) * x22 * x94) + (real(-1) * x23 * x98) + (real(-1) * x24 * x47) + (real(-1) * x24 * x94) + (real(-1) * x25 * x98) + (real(-1) * x26 * x47) + (real(-1) * x26 * x92) + (real(-1) * x27 * x98) + (real(-1) * x29 * x55) + (real(-1) * x32 * x42) + (real(-1) * x37 * x42) + (real(-1) * x40 * x92) + (real(-1) * x40 * x94) + (real(-1) * x41 * x42) + (real(-1) * x47 * x54) + (real(-1) * x48 * x98) + (real(-1) * x49 * x8) + (real(-1) * x50 * x67) + (real(-1) * x51 * (b0 * b0 * b0)) + (real(-1) * x55 * x9) + (real(-1) * x65 * x69) + (real(-1) * x66 * x7) + (real(-1) * x67 * x83) + (real(-1) * x69 * x88) + (real(-1) * x79 * x80) + (real(-1) * x79 * x87) + (real(-1) * x79 * x97) + (real(-1) * x80 * x81) + (real(-1) * x92 * x93) + (real(-1) * x93 * x94) + (real(-4) * b0 * x23) + (real(-4) * x41 * x47) + (real(-3) * b0 * x48) + (real(-2) * bp1 * x23) + ((real(-1) / real(2)) * n * x10) + (a1 * x49 * x7) + (a1 * x63 * x7) + (a1 * x66 * x7) + (a1 * x67 * x7) + (a2 * x49 * x7) + (a2 * x61 * x7) + (a2 * x66 * x7) + (a2 * x67 * x7) + (b0 * n * x16) + (b0 * x61 * x7) + (b0 * x63 * x7) + (b1 * n * x16) + (b1 * x49 * x7) + (b1 * x67 * x7) + (b2 * n * x16) + (b2 * x49 * x7) + (b2 * x67 * x7) + (bm1 * x61 * x7) + (bm1 * x63 * x7) + (bp1 * gp2 * x14) + (bp1 * n * x16) + (bp1 * x49 * x7) + (bp1 * x67 * x7) + (bp2 * gp2 * x14) + (eta * gp1 * x67) + (gp1 * x47 * x7) + (gp1 * x61 * x7) + (gp1 * x63 * x7) + (gp1 * x7 * x92) + (gp1 * x7 * x94) + (gp2 * x7 * x92) + (gp2 * x7 * x94) + (n * x66 * x7) + (x47 * x7 * x92) + (x47 * x7 * x94) + ((real(1) / real(2)) * n * x61 * x7) + ((real(1) / real(2)) * n * x63 * x7) + ((real(1) / real(2)) * n * x7 * x92) + ((real(1) / real(2)) * n * x7 * x94) + ((real(1) / real(2)) * x61 * x67 * x7) + ((real(1) / real(2)) * x63 * x67 * x7) + ((real(1) / real(2)) * x67 * x7 * x92) + ((real(1) / real(2)) * x67 * x7 * x94) + (real(-1) * b1 * bp1 * x119) + (real(-1) * b1 * bp1 * x120) + (real(-1) * b2 * bp1 * x119) + (real(-1) * b2 * bp1 * x120) + (real(-1) * bm1 * gp1 * x69) + (real(-1) * bm1 * x113 * x44) + (real(-1) * bm1 * x51 * x65) + (real(-1) * bm1 * x67 * x8) + (real(-1) * bp1 * x2 * x60) + (real(-1) * bp1 * x3 * x60) + (real(-1) * bp1 * x40 * x79) + (real(-1) * bp1 * x45 * x67) + (real(-1) * gp1 * x14 * x5) + (real(-1) * gp2 * x5 * x7) + (real(-2) * bm1 * eta * x16) + (real(-2) * bm1 * x19 * x4) + (real(2) * a1 * x65 * x7) + (real(2) * a1 * x7 * x88) + (real(2) * a2 * x65 * x7) + (real(2) * a2 * x7 * x88) + (real(2) * b0 * x66 * x7) + (real(2) * b1 * x66 * x7) + (real(2) * b2 * x66 * x7) + (real(2) * bm1 * x66 * x7) + (real(2) * bp1 * eta * x16) + (real(2) * bp1 * gp1 * x14) + (real(2) * eta * gp1 * x88) + (real(2) * gp2 * x47 * x7) + (real(3) * gp1 * x65 * x7) + (real(4) * b0 * x67 * x7) + (real(4) * bm1 * x67 * x7) + (real(4) * n * x65 * x7) + (real(4) * n * x7 * x88) + (a1 * a2 * b1 * x7) + (a1 * a2 * b2 * x7) + (a1 * a2 * bp1 * x7) + (a1 * a2 * eta * gp1) + (a1 * a2 * gp1 * x7) + (a1 * b0 * eta * gp1) + (a1 * b0 * x67 * x7) + (a1 * b1 * gp2 * x7) + (a1 * b1 * n * x7) + (a1 * b1 * x47 * x7) + (a1 * b1 * x67 * x7) + (a1 * b2 * gp2 * x7) + (a1 * b2 * n * x7) + (a1 * b2 * x47 * x7) + (a1 * b2 * x67 * x7) + (a1 * bm1 * x67 * x7) + (a1 * bp1 * n * x7) + (a1 * bp1 * x67 * x7) + (a1 * bp2 * gp2 * x7) + (a1 * eta * gp1 * n) + (a1 * gp1 * n * x7) + (a1 * n * x63 * x7) + (a2 * b0 * eta * gp1) + (a2 * b0 * x67 * x7) + (a2 * b1 * gp2 * x7) + (a2 * b1 * n * x7) + (a2 * b1 * x47 * x7) + (a2 * b1 * x67 * x7) + (a2 * b2 * gp2 * x7) + (a2 * b2 * n * x7) + (a2 * b2 * x47 * x7) + (a2 * b2 * x67 * x7) + (a2 * bm1 * x67 * x7) + (a2 * bp1 * n * x7) + (a2 * bp1 * x67 * x7) + (a2 * bp2 * gp2 * x7) + (a2 * eta * gp1 * n) + (a2 * gp1 * n * x7) + (a2 * n * x61 * x7) + (b0 * b1 * n * x7) + (b0 * b1 * x67 * x7) + (b0 * b2 * n * x7) + (b0 * b2 * x67 * x7) + (b0 * bp1 * n * x7) + (b0 * bp1 * x67 * x7) + (b0 * eta * gp1 * x67) + (b1 * b2 * bp1 * x14) + (b1 * b2 * gp1 * x7) + (b1 * bm1 * n * x7) + (b1 * bm1 * x67 * x7) + (b1 * bp1 * x7 * x94) + (b1 * bp2 * gp2 * x7) + (b1 * eta * gp1 * n) + (b1 * gp2 * n * x7) + (b2 * bm1 * n * x7) + (b2 * bm1 * x67 * x7) + (b2 * bp1 * x7 * x92) + (b2 * bp2 * gp2 * x7) + (b2 * eta * gp1 * n) + (b2 * gp2 * n * x7) + (bm1 * bp1 * n * x7) + (bm1 * bp1 * x67 * x7) + (bp1 * bp2 * gp2 * x7) + (bp1 * eta * gp1 * gp2) + (bp1 * eta * gp1 * n) + (bp2 * eta * gp1 * gp2) + (eta * gp1 * n * x92) + (eta * gp1 * n * x94) + (real(2) * a1 * b1 * gp1 * x7) + (real(2) * a1 * b2 * gp1 * x7) + (real(2) * a1 * bm1 * eta * gp1) + (real(2) * a1 * bm1 * gp1 * x7) + (real(2) * a1 * bp1 * gp2 * x7) + (real(2) * a2 * b1 * gp1 * x7) + (real(2) * a2 * b2 * gp1 * x7) + (real(2) * a2 * bm1 * eta * gp1) + (real(2) * a2 * bm1 * gp1 * x7) + (real(2) * a2 * bp1 * gp2 * x7) + (real(2) * b0 * b1 * gp2 * x7) + (real(2) * b0 * b1 * x47 * x7) + (real(2) * b0 * b2 * gp2 * x7) + (real(2) * b0 * b2 * x47 * x7) + (real(2) * b0 * bm1 * eta * gp1) + (real(2) * b0 * bp2 * gp2 * x7) + (real(2) * b1 * b2 * gp2 * x7) + (real(2) * b1 * bm1 * gp1 * x7) + (real(2) * b1 * bm1 * gp2 * x7) + (real(2) * b1 * bm1 * x47 * x7) + (real(2) * b1 * eta * gp1 * x67) + (real(2) * b2 * bm1 * gp1 * x7) + (real(2) * b2 * bm1 * gp2 * x7) + (real(2) * b2 * bm1 * x47 * x7) + (real(2) * b2 * eta * gp1 * x67) + (real(2) * bm1 * bp2 * gp2 * x7) + (real(2) * bp1 * eta * gp1 * x67) + (real(2) * bp2 * gp2 * n * x7) + (real(3) * a1 * a2 * n * x7) + (real(3) * a1 * a2 * x67 * x7) + (real(3) * a1 * bp1 * gp1 * x7) + (real(3) * a2 * bp1 * gp1 * x7) + (real(3) * b0 * b1 * gp1 * x7) + (real(3) * b0 * b2 * gp1 * x7) + (real(3) * b0 * eta * gp1 * n) + (real(3) * b1 * b2 * x47 * x7) + (real(3) * b1 * bp1 * gp1 * x7) + (real(3) * b1 * bp1 * gp2 * x7) + (real(3) * b1 * gp1 * n * x7) + (real(3) * b2 * bp1 * gp1 * x7) + (real(3) * b2 * bp1 * gp2 * x7) + (real(3) * b2 * gp1 * n * x7) + (real(3) * bp1 * gp2 * n * x7) + (real(4) * a1 * a2 * b0 * x7) + (real(4) * a1 * a2 * bm1 * x7) + (real(4) * a1 * b0 * bm1 * x7) + (real(4) * a1 * b0 * gp1 * x7) + (real(4) * a2 * b0 * bm1 * x7) + (real(4) * a2 * b0 * gp1 * x7) + (real(4) * b0 * bm1 * gp1 * x7) + (real(4) * b0 * bp1 * gp2 * x7) + (real(4) * bm1 * bp1 * gp2 * x7) + (real(5) * a1 * b0 * n * x7) + (real(5) * a1 * bm1 * n * x7) + (real(5) * a2 * b0 * n * x7) + (real(5) * a2 * bm1 * n * x7) + (real(5) * b0 * gp1 * n * x7) + (real(5) * bm1 * eta * gp1 * n) + (real(6) * bm1 * bp1 * gp1 * x7) + (real(6) * bp1 * gp1 * n * x7) + (real(7) * b0 * bp1 * gp1 * x7) + (real(8) * b0 * bm1 * n * x7) + (a1 * a2 * b1 * n * x7) + (a1 * a2 * b2 * n * x7) + (a1 * a2 * bp1 * n * x7) + (a1 * a2 * eta * gp1 * n) + (a1 * b0 * eta * gp1 * n) + (a1 * b1 * b2 * bp1 * x7) + (a1 * b1 * eta * gp1 * n) + (a1 * b2 * eta * gp1 * n) + (a1 * bp1 * eta * gp1 * n) + (a2 * b0 * eta * gp1 * n) + (a2 * b1 * b2 * bp1 * x7) + (a2 * b1 * eta * gp1 * n) + (a2 * b2 * eta * gp1 * n) + (a2 * bp1 * eta * gp1 * n) + (b0 * b1 * eta * gp1 * n) + (b0 * b2 * eta * gp1 * n) + (b0 * bp1 * eta * gp1 * n) + (real(2) * a1 * a2 * b0 * n * x7) + (real(2) * a1 * a2 * bm1 * n * x7) + (real(2) * b0 * b1 * b2 * bp1 * x7) + (real(2) * b0 * bm1 * eta * gp1 * n) + (real(2) * b1 * b2 * bm1 * bp1 * x7) + (real(2) * b1 * bm1 * eta * gp1 * n) + (real(2) * b2 * bm1 * eta * gp1 * n) + (real(2) * bm1 * bp1 * eta * gp1 * n)));
}

real f22_p1_den(const real& n, const real& a1, const real& a2, const real& b1, const real& b2, const real& eta, const real& bm1, const real& b0, const real& bp1, const real& bp2, const real& g0, const real& gp1, const real& gp2) {
    (void)bp2;
    (void)g0;
    (void)gp2;
    const real x0 = (real(2) * eta);
    return (gp1 + (eta * eta) + (a1 * eta) + (a2 * eta) + (b0 * x0) + (b1 * eta) + (b2 * eta) + (bm1 * x0) + (bp1 * eta) + (n * x0));
}

real f32_p1_num(const real& n, const real& a1, const real& a2, const real& a3, const real& b1, const real& b2, const real& eta, const real& bm1, const real& b0, const real& bp1, const real& bp2, const real& g0, const real& gp1, const real& gp2) {
    const real x0 = (b0 * b0);
    const real x1 = (b0 * b0 * b0);
    const real x2 = (bp1 * bp1);
    const real x3 = (real(2) * g0);
    const real x4 = ((real(1) / real(2)) * n);
    const real x5 = (b0 * b1);
    const real x6 = (b0 * b2);
    const real x7 = (b0 * bp1);
    const real x8 = (b0 * gp1);
    const real x9 = (b1 * b2);
    const real x10 = (b1 * bp1);
    const real x11 = (b2 * bp1);
    const real x12 = (bm1 * bp1);
    const real x13 = (bm1 * eta);
    const real x14 = (eta * gp1);
    const real x15 = (eta * gp2);
    const real x16 = (b0 * x3);
    const real x17 = (b0 * n);
    const real x18 = ((real(3) / real(2)) * x17);
    const real x19 = (real(2) * bp1);
    const real x20 = (bp1 * x4);
    const real x21 = (g0 * n);
    const real x22 = (a1 * eta);
    const real x23 = (a2 * x22);
    const real x24 = (a3 * x22);
    const real x25 = (bp1 * x22);
    const real x26 = (a2 * eta);
    const real x27 = (a3 * x26);
    const real x28 = (bp1 * x26);
    const real x29 = (a3 * eta);
    const real x30 = (bp1 * x29);
    const real x31 = (bp1 * bp1 * bp1);
    const real x32 = ((real(1) / real(2)) * (n * n));
    const real x33 = (eta * x0);
    const real x34 = (eta * x2);
    const real x35 = (b0 * x32);
    const real x36 = (eta * x32);
    return (gp1 * (gp1 + gp2 + x0 + x1 + x10 + x11 + x12 + x13 + x14 + x15 + x16 + x2 + x23 + x24 + x25 + x27 + x28 + x3 + x30 + x32 + x33 + x34 + x35 + x36 + x5 + x6 + x7 + x8 + x9 + (real(-1) * bm1) + (real(-1) * x18) + (real(-1) * x20) + (real(-1) * x21) + (real(-1) * x31) + (real(-1) * x4) + (a1 * x15) + (a1 * x34) + (a2 * x15) + (a2 * x34) + (a3 * x15) + (a3 * x34) + (b0 * x22) + (b0 * x26) + (b0 * x29) + (b1 * g0) + (b1 * x0) + (b2 * g0) + (b2 * x0) + (b2 * x5) + (bm1 * g0) + (bp1 * x14) + (bp1 * x23) + (bp1 * x24) + (bp1 * x27) + (bp1 * x36) + (bp2 * x15) + (eta * x12) + (eta * x18) + (eta * x20) + (eta * x3) + (eta * x31) + (eta * x7) + (gp2 * n) + (n * x10) + (n * x11) + (n * x15) + (n * x2) + (n * x22) + (n * x25) + (n * x26) + (n * x28) + (n * x29) + (n * x30) + (n * x34) + (x15 * x19) + (real(-1) * a1 * x33) + (real(-1) * a2 * x33) + (real(-1) * a3 * x33) + (real(-1) * b0 * bm1) + (real(-1) * b0 * x13) + (real(-1) * b0 * x23) + (real(-1) * b0 * x24) + (real(-1) * b0 * x27) + (real(-1) * b1 * gp2) + (real(-1) * b1 * n) + (real(-1) * b1 * x2) + (real(-1) * b2 * gp2) + (real(-1) * b2 * n) + (real(-1) * b2 * x2) + (real(-1) * bp1 * gp1) + (real(-1) * bp1 * x32) + (real(-1) * bp1 * x9) + (real(-1) * bp2 * gp2) + (real(-1) * eta * x1) + (real(-1) * eta * x16) + (real(-1) * eta * x21) + (real(-1) * eta * x35) + (real(-1) * eta * x4) + (real(-1) * eta * x8) + (real(-1) * g0 * x13) + (real(-1) * g0 * x22) + (real(-1) * g0 * x26) + (real(-1) * g0 * x29) + (real(-1) * gp2 * x19) + (real(-1) * n * x0) + (real(-1) * n * x33) + (real(-1) * n * x5) + (real(-1) * n * x6) + (real(-1) * x17 * x22) + (real(-1) * x17 * x26) + (real(-1) * x17 * x29)));
}

real f32_p1_den(const real& n, const real& a1, const real& a2, const real& a3, const real& b1, const real& b2, const real& eta, const real& bm1, const real& b0, const real& bp1, const real& bp2, const real& g0, const real& gp1, const real& gp2) {
    (void)n;
    (void)a1;
    (void)a2;
    (void)a3;
    (void)b1;
    (void)b2;
    (void)bm1;
    (void)bp2;
    (void)g0;
    (void)gp2;
    return (gp1 * (real(-1) + bp1 + eta + (real(-1) * b0) + (bp1 * eta) + (real(-1) * b0 * eta)));
}

real f32_pi3(const real& n, const real& a1, const real& a2, const real& a3, const real& b1, const real& b2, const real& eta, const real& bm2, const real& bm1, const real& b0, const real& bp1, const real& gm1, const real& g0, const real& gp1, const real& gp2, const real& P1) {
    const real x0 = (g0 * g0);
    const real x1 = (b1 * gp1);
    const real x2 = (b2 * gp1);
    const real x3 = (bm1 * gp1);
    const real x4 = (bp1 * gp1);
    const real x5 = (b0 * g0);
    const real x6 = (b0 * gp1);
    const real x7 = (real(2) * g0);
    const real x8 = (eta * g0);
    const real x9 = (b1 * b2);
    const real x10 = (n * x6);
    const real x11 = (n * x4);
    const real x12 = (bm1 * bm1);
    const real x13 = (gp1 * gp1);
    const real x14 = (b0 * b0);
    const real x15 = (a1 * eta);
    const real x16 = (gp1 * x15);
    const real x17 = (a2 * eta);
    const real x18 = (gp1 * x17);
    const real x19 = (a3 * eta);
    const real x20 = (n * n);
    const real x21 = ((real(1) / real(2)) * x20);
    const real x22 = (bp1 * bp1);
    return (x12 + x13 + (real(-1) * g0) + (real(-1) * x0) + (real(-1) * x1) + (real(-1) * x10) + (real(-1) * x11) + (real(-1) * x2) + (real(-1) * x3) + (real(-1) * x4) + (real(-1) * (b0 * b0 * b0)) + (real(-3) * x5) + (real(-2) * x6) + (P1 * gp1) + (b0 * bm1) + (b1 * bm1) + (b2 * bm1) + (bm1 * bm2) + (eta * g0) + (eta * x0) + (gm1 * n) + (gp1 * gp2) + (gp1 * x14) + (gp1 * x22) + (n * x14) + ((real(1) / real(2)) * b0 * n) + ((real(1) / real(2)) * b1 * n) + ((real(1) / real(2)) * b2 * n) + ((real(1) / real(2)) * bm1 * n) + ((real(1) / real(2)) * bm2 * n) + ((real(1) / real(2)) * gp1 * n) + ((real(1) / real(2)) * gp1 * x20) + (real(-1) * P1 * b0) + (real(-1) * P1 * b1) + (real(-1) * P1 * b2) + (real(-1) * P1 * bm1) + (real(-1) * P1 * bm2) + (real(-1) * P1 * g0) + (real(-1) * P1 * x8) + (real(-1) * a1 * x8) + (real(-1) * a2 * x16) + (real(-1) * a2 * x8) + (real(-1) * a3 * x16) + (real(-1) * a3 * x18) + (real(-1) * a3 * x8) + (real(-1) * b0 * x21) + (real(-1) * b0 * x8) + (real(-1) * b0 * x9) + (real(-1) * b1 * x14) + (real(-1) * b1 * x21) + (real(-1) * b1 * x5) + (real(-1) * b1 * x7) + (real(-1) * b2 * x14) + (real(-1) * b2 * x21) + (real(-1) * b2 * x5) + (real(-1) * b2 * x7) + (real(-1) * bm1 * x21) + (real(-1) * bm1 * x7) + (real(-1) * bm1 * x8) + (real(-1) * bm2 * x21) + (real(-1) * eta * x10) + (real(-1) * eta * x11) + (real(-1) * eta * x13) + (real(-1) * eta * x3) + (real(-1) * g0 * gm1) + (real(-1) * g0 * x12) + (real(-1) * g0 * x14) + (real(-1) * g0 * x21) + (real(-1) * g0 * x9) + (real(-1) * n * x1) + (real(-1) * n * x16) + (real(-1) * n * x18) + (real(-1) * n * x2) + (real(-1) * x15 * x4) + (real(-1) * x15 * x6) + (real(-1) * x17 * x4) + (real(-1) * x17 * x6) + (real(-1) * x19 * x4) + (real(-1) * x19 * x6) + ((real(-3) / real(2)) * n * x8) + ((real(5) / real(2)) * g0 * n) + (P1 * eta * gp1) + (b0 * b1 * gp1) + (b0 * b1 * n) + (b0 * b2 * gp1) + (b0 * b2 * n) + (b0 * bp1 * gp1) + (b0 * g0 * n) + (b1 * b2 * gp1) + (b1 * b2 * n) + (b1 * bp1 * gp1) + (b1 * g0 * n) + (b2 * bp1 * gp1) + (b2 * g0 * n) + (bm1 * g0 * n) + (eta * g0 * gm1) + (eta * g0 * x12) + (eta * g0 * x14) + ((real(1) / real(2)) * eta * g0 * x20) + ((real(1) / real(2)) * eta * gp1 * n) + (real(-1) * b0 * bm1 * g0) + (real(-1) * b0 * eta * x4) + (real(-1) * b1 * bm1 * g0) + (real(-1) * b2 * bm1 * g0) + (real(-1) * bm1 * bm2 * n) + (real(-1) * eta * gp1 * gp2) + (real(-1) * eta * gp1 * x14) + (real(-1) * eta * gp1 * x21) + (real(-1) * eta * gp1 * x22) + (real(-1) * gp1 * n * x19) + (a1 * a2 * eta * g0) + (a1 * a3 * eta * g0) + (a1 * b0 * eta * g0) + (a1 * bm1 * eta * g0) + (a1 * eta * g0 * n) + (a2 * a3 * eta * g0) + (a2 * b0 * eta * g0) + (a2 * bm1 * eta * g0) + (a2 * eta * g0 * n) + (a3 * b0 * eta * g0) + (a3 * bm1 * eta * g0) + (a3 * eta * g0 * n) + (b0 * bm1 * eta * g0) + (b0 * eta * g0 * n) + (bm1 * eta * g0 * n));
}

}  // namespace lfortho::corrected

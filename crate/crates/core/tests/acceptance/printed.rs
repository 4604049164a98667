//! Cells of the printed distribution tables, copied verbatim (including
//! typesetting defects, which the checks repair or route around explicitly).

/// (n, small factors, big factor)
pub const N: &[(usize, &str, &str)] = &[
    (1, "1", "1"),
    (2, "x+1", "1"),
    (3, "1", "x^4 + 2x^3 + 2x + 1"),
    (4, "x^2 + 1", "x^8 + 3x^7 + x^5 + 2x^4 + x^3 + 3x + 1"),
    (5, "x^2 - x + 1", "x^{18} + 5x^{17} + 7x^{16} + 8x^{15} + 8x^{14} + 6x^{13} + 2x^{12} + 6x^{11} + 10x^{10} + 14x^9 + 10x^8 + 6x^7 + 2x^6 + 6x^5 + 8x^4 + 8x^3 + 7x^2 + 5x + 1"),
    (6, "(x + 1)(x^2 - x + 1)^2", "x^{30} + 6x^{29} + 11x^{28} + 13x^{27} + 13x^{26} + 6x^{25} - x^{24} + 6x^{23} + 21x^{22} + 30x^{21}+ 19x^{20} + 3x^{19} - 7x^{18} + 14x^{17} + 27x^{16} + 36x^{15} + 27x^{14} 14x^{13} - 7x^{12} + 3x^{11} + 19x^{10} + 30x^9 + 21x^8 + 6x^7 - x^6 + 6x^5 + 13x^4 + 13x^3 + 11x^2 + 6x + 1"),
    (7, "(x^2 - x + 1)", "x^{54} + 7x^{53} + 16x^{52} + 23x^{51} + 36x^{50} + 39x^{49} + 38x^{48} + 45x^{47} + 62x^{46} + 71x^{45} + 83x^{44} + 82x^{43} + 83x^{42} + 91x^{41} + 86x^{40} + 85x^{39} + 128x^{38} + 149x^{37} + 144x^{36} + 129x^{35} + 132x^{34} + 101x^{33} + 137x^{32} + 166x^{31} + 204x^{30} + 182x^{29} +146x^{28} + 108x^{27} + 146x^{26} + 182x^{25} + 204x^{24} + 166x^{23} + 137x^{22} + 101x^{21} + 132x^{20} + 129x^{19} + 144x^{18}+ 149x^{17} + 128x^{16} + 85x^{15} + 86x^{14} + 91x^{13} + 83x^{12} + 82x^{11} + 83x^{10} + 71x^9 + 62x^8 + 45x^7 + 38x^6 + 39x^5 + 36x^4 + 23x^3 + 16x^2 + 7x + 1"),
    (8, "(x^4 + 1)(x^2 - x + 1)", "x^{78} + 8x^{77} + 22x^{76} + 36x^{75} + 60x^{74} + 71x^{73} + 66x^{72} + 67x^{71} + 84x^{70} + 94x^{69} + 133x^{68} + 150x^{67} + 171x^{66} + 182x^{65} + 164x^{64} + 135x^{63} + 196x^{62} + 249x^{61} + 280x^{60} + 278x^{59} + 290x^{58} + 218x^{57} + 243x^{56} + 270x^{55} + 375x^{54} + 456x^{53} + 432x^{52} + 326x^{51} + 322x^{50} + 329x^{49} + 442x^{48} + 481x^{47} + 533x^{46} + 464x^{45} + 413x^{44} + 362x^{43} + 437x^{42} + 489x^{41} + 520x^{40} + 462x^{39} + 520x^{38} + 489x^{37} + 437x^{36} + 362x^{35} + 413x^{34} + 464x^{33} + 533x^{32} + 481x^{31} + 442x^{30} + 329x^{29} + 322x^{28} + 326x^{27} + 432x^{26} + 456x^{25} + 375x^{24} + 270x^{23} + 243x^{22} + 218x^{21} + 290x^{20} + 278x^{19} + 280x^{18} + 249x^{17} + 196x^{16} + 135x^{15} + 164x^{14} + 182x^{13} +171x^{12} + 150x^{11} + 133x^{10} + 94x^9 + 84x^8 + 67x^7 + 66x^6 +71x^5 + 60x^4 + 36x^3 + 22x^2 + 8x + 1"),
];

/// (n, k, polynomial)
pub const H: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (2, 1, "x+1"),
    (2, 2, "2"),
    (3, 1, "x^2+4x+1"),
    (3, 2, "3(x+1)"),
    (3, 3, "6"),
    (4, 1, "(x+1)(x^2+10x+1)"),
    (4, 2, "6(x+1)^2"),
    (4, 3, "12(x+1)"),
    (4, 4, "24"),
    (5, 1, "x^4+26x^3+66x^2+26x+1"),
    (5, 2, "10(x+1)(x^2+4x+1)"),
    (5, 3, "30(x+1)^2"),
    (5, 4, "60(x+1)"),
    (5, 5, "120"),
    (6, 1, "(x+1)(x^4+56x^3+246x^2+56x+1)"),
    (6, 2, "20(x^2+4x+1)^2"),
    (6, 3, "90(x+1)^3"),
    (6, 4, "180(x+1)^2"),
    (6, 5, "360(x+1)"),
    (6, 6, "720"),
    (7, 1, "x^6+120x^5+1191x^4+2416x^3+1191x^2+120x+1"),
    (7, 2, "35(x+1)(x^2+4x+1)(x^2+10x+1)"),
    (7, 3, "210(x+1)^2(x^2+4x+1)"),
    (7, 4, "630(x+1)^3"),
    (7, 5, "1260(x+1)^2"),
    (7, 6, "2520(x+1)"),
    (7, 7, "5040"),
    (8, 1, "(x+1)(x^6+246x^5+4047x^4+11572x^3+4047x^2+246x+1)"),
    (8, 2, "70(x+1)^2(x^2+10x+1)^2"),
    (8, 3, "560(x+1)(x^2+4x+1)^2"),
    (8, 4, "2520(x+1)^4"),
    (8, 5, "5040(x+1)^3"),
    (8, 6, "10080(x+1)^2"),
    (8, 7, "20160(x+1)"),
    (8, 8, "40320"),
    (9, 1, "x^8+502x^7+14608x^6+88234x^5+156190x^4+88234x^3+14608x^2+502x+1"),
    (9, 2, "126(x+1)(x^2+10x+1)(x^4+26x^3+66x^2+26x+1)"),
    (9, 3, "1680(x^2+4x+1)^3"),
    (9, 4, "7560(x+1)^3(x^2+4x+1)"),
];

/// (n, k, polynomial)
pub const J: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (2, 1, "x+1"),
    (3, 1, "x^2+4x+1"),
    (3, 2, "(x + 1)(x^2 + x + 1)"),
    (4, 1, "(x + 1)(x^2 + 10x + 1)"),
    (4, 2, "(x + 1)(x^4 + 2x^3 + 6x^2 + 2x + 1)"),
    (4, 3, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)"),
    (5, 1, "x^4 + 26x^3 + 66x^2 + 26x + 1"),
    (5, 2, "(x + 1)^3(x^4 + x^3 + 11x^2 + x + 1)"),
    (5, 3, "(x + 1)(x^2 + x + 1)(x^6 + 2x^5 + 3x^4 + 8x^3 + 3x^2 + 2x + 1)"),
    (5, 4, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1)"),
    (6, 1, "(x + 1)(x^4 + 56x^3 + 246x^2 + 56x + 1)"),
    (6, 2, "(x + 1)(x^8 + 4x^7 + 25x^6 + 88x^5 + 124x^4 + 88x^3 + 25x^2 + 4x + 1)"),
    (6, 3, "(x + 1)^2(x^{10} + 3x^9 + 7x^8 + 22x^7 + 31x^6 + 52x^5 + 31x^4 + 22x^3 + 7x^2 + 3x + 1)"),
    (6, 4, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)(x^8 + 2x^7 + 3x^6 + 4x^5 + 10x^4 + 4x^3 + 3x^2 + 2x + 1)"),
    (6, 5, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1)(x^5 + x^4 + x^3 + x^2 + x + 1)"),
    (7, 1, "x^6 + 120x^5 + 1191x^4 + 2416x^3 + 1191x^2 + 120x + 1"),
    (7, 2, "(x + 1)(x^{10} + 5x^9 + 39x^8 + 218x^7 + 562x^6 + 870x^5 + 562x^4 + 218x^3 + 39x^2 + 5x + 1)"),
    (7, 3, "(x + 1)(x^2 + x + 1)(x^{12} + 4x^{11} + 10x^{10} + 38x^9 + 79x^8 + 166x^7 + 244x^6 + 166x^5 + 79x^4 + 38x^3 + 10x^2 + 4x + 1)"),
    (7, 4, "(x + 1)^4(x^2 + x + 1) (x^{12} + x^{11} + 4x^{10} + 4x^9 + 21x^8 + 43x^6 + 21x^4 + 4x^3 + 4x^2 + x + 1)"),
    (7, 5, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1) (x^{10} + 2x^9 + 3x^8 + 4x^7 + 5x^6 + 12x^5 + 5x^4 + 4x^3 + 3x^2 + 2x + 1)"),
    (7, 6, "(x + 1)(x^2 + x + 1)(x^3 + x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1) (x^5 + x^4 + x^3 + x^2 + x + 1)(x^6 + x^5 + x^4 + x^3 + x^2 + x + 1)"),
];

/// (n, k (d = 2, printed in y), polynomial)
pub const L: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (2, 1, "y+1"),
    (2, 2, "2"),
    (3, 1, "2(y+2)"),
    (3, 2, "y+5"),
    (3, 3, "6"),
    (4, 1, "4(y^2+4y+1)"),
    (4, 2, "2(y+1)(y+5)"),
    (4, 3, "8(y+2)"),
    (4, 4, "24"),
    (5, 1, "12(y^2+6y+3)"),
    (5, 2, "6(y+1)(y+9)"),
    (5, 3, "2(y^2+22y+37)"),
    (5, 4, "24(y+4)"),
    (5, 5, "120"),
    (6, 1, "36(y+1)(y^2+8y+1)"),
    (6, 2, "4(4y^3+55y^2+94y+27)"),
    (6, 3, "6(y+1)(y^2+22y+37)"),
    (6, 4, "4(y+5)(13y+17)"),
    (6, 5, "72(3y+7)"),
    (6, 6, "720"),
    (7, 1, "144(y^3+12y^2+18y+4)"),
    (7, 2, "2(37y^3+615y^2+1359y+509)"),
    (7, 3, "4(7y^3+204y^2+651y+398)"),
    (7, 4, "6(y^3+75y^2+387y+377)"),
    (7, 5, "12(13y^2+154y+253)"),
    (7, 6, "360(3y+11)"),
    (7, 7, "5040"),
];

/// (n, k, polynomial)
pub const K: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (2, 1, "x+1"),
    (2, 2, "2"),
    (3, 1, "x^2+4x+1"),
    (3, 2, "2(2x+1)"),
    (3, 3, "6"),
    (4, 1, "(x+1)(x^2+10x+1)"),
    (4, 2, "2(x+1)(5x+1)"),
    (4, 3, "6(3x+1)"),
    (4, 4, "24"),
    (5, 1, "x^4+26x^3+66x^2+26x+1"),
    (5, 2, "2(13x^3+35x^2+11x+1)"),
    (5, 3, "6(11x^2+8x+1)"),
    (5, 4, "24(4x+1)"),
    (5, 5, "120"),
    (6, 1, "(x+1)(x^4+56x^3+246x^2+56x+1)"),
    (6, 2, "2(38x^4+183x^3+121x^2+17x+1)"),
    (6, 3, "6(x+1)(46x^2+13x+1)"),
    (6, 4, "24(19x^2+10x+1)"),
    (6, 5, "120(5x+1)"),
    (6, 6, "720"),
    (7, 1, "x^6+120x^5+1191x^4+2416x^3119x^2+120x+1"),
    (7, 2, "2(116x^5+969x^4+1100x^3+310x^2+24x+1)"),
    (7, 3, "6(202x^4+459x^3+157x^2+21x+1)"),
    (7, 4, "24(103x^3+89x^2+17x+1)"),
    (7, 5, "120(29x^2+12x+1)"),
    (7, 6, "720(6x+1)"),
    (7, 7, "5040"),
    (8, 1, "(x+1)(x^6+246x^5+4047x^4+11572x^3+4047x^2+246x+1)"),
    (8, 2, "2(382x^6+5124x^5+9517x^4+4420x^3+684x^2+32x+1)"),
    (8, 3, "6(986x^5+3454x^4+1925x^3+325x^2+29x+1)"),
    (8, 4, "24(x+1)(614x^3+201x^2+24x+1)"),
    (8, 5, "120(190x^3+125x^2+20x+1)"),
    (8, 6, "720(41x^2+14x+1)"),
    (8, 7, "5040(7x+1)"),
    (8, 8, "40320"),
];

/// (n, k1, k2, polynomial)
pub const HK1K2: &[(usize, usize, usize, &str)] = &[
    (1, 1, 1, "1"),
    (2, 1, 1, "x+1"),
    (2, 1, 2, "2"),
    (2, 2, 1, "2"),
    (2, 2, 2, "2"),
    (3, 1, 1, "x^2+2x+3"),
    (3, 1, 2, "2(x+2)"),
    (3, 1, 3, "6"),
    (3, 2, 1, "2(x+2)"),
    (3, 2, 2, "x+5"),
    (3, 2, 3, "6"),
    (3, 3, 1, "6"),
    (3, 3, 2, "6"),
    (3, 3, 3, "6"),
    (4, 1, 1, "x^3+3x^2+9x+11"),
    (4, 1, 2, "2(x^2+4x+7)"),
    (4, 1, 3, "6(x+3)"),
    (4, 1, 4, "24"),
    (4, 2, 1, "2(x^2+4x+7)"),
    (4, 2, 2, "2(x^2+2x+9)"),
    (4, 2, 3, "4(x+5)"),
    (4, 2, 4, "24"),
    (4, 3, 1, "6(x+3)"),
    (4, 3, 2, "4(x+5)"),
    (4, 3, 3, "2(x+11)"),
    (4, 3, 4, "24"),
    (4, 4, 1, "24"),
    (4, 4, 2, "24"),
    (4, 4, 3, "24"),
    (4, 4, 4, "24"),
    (5, 1, 1, "x^4+4x^3+18x^2+44x+53"),
    (5, 1, 2, "2(x^3+6x^2+21x+32)"),
    (5, 1, 3, "6(x^2+6x+13)"),
    (5, 1, 4, "24(x+4)"),
    (5, 2, 1, "2(x^3+6x^2+21x+32)"),
    (5, 2, 2, "(x+3)(x^2+4x+25)"),
    (5, 2, 3, "4(x^2+7x+22)"),
    (5, 2, 4, "6(3x+17)"),
    (5, 3, 1, "6(x^2+6x+13)"),
    (5, 3, 2, "4(x^2+7x+22)"),
    (5, 3, 3, "2(x^2+10x+49)"),
    (5, 3, 4, "12(x+9)"),
    (5, 4, 1, "24(x+4)"),
    (5, 4, 2, "6(3x+17)"),
    (5, 4, 3, "12(x+9)"),
    (5, 4, 4, "6(x+19)"),
    (5, 5, 1, "120"),
    (5, 5, 2, "120"),
    (5, 5, 3, "120"),
    (5, 5, 4, "120"),
];

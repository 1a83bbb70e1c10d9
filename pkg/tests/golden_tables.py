"""Published golden tables, transcribed as {n: {m: value}} (zeros omitted)."""

# Weyl multiplicities in V^n, n <= 16
WEYL = {
    0: {0: 1},
    1: {1: 1},
    2: {0: 1, 2: 1},
    3: {1: 2, 3: 1},
    4: {0: 2, 2: 3, 4: 1},
    5: {1: 5, 3: 3, 5: 1},
    6: {0: 5, 2: 9, 4: 5, 6: 1},
    7: {1: 14, 3: 14, 5: 6, 7: 1},
    8: {0: 14, 2: 28, 4: 20, 6: 7, 8: 1},
    9: {1: 42, 3: 48, 5: 27, 7: 8, 9: 1},
    10: {0: 42, 2: 90, 4: 75, 6: 35, 8: 9, 10: 1},
    11: {1: 132, 3: 165, 5: 110, 7: 44, 9: 10, 11: 1},
    12: {0: 132, 2: 297, 4: 275, 6: 154, 8: 54, 10: 11, 12: 1},
    13: {1: 429, 3: 572, 5: 429, 7: 208, 9: 65, 11: 12, 13: 1},
    14: {0: 429, 2: 1001, 4: 1001, 6: 637, 8: 273, 10: 77, 12: 13, 14: 1},
    15: {1: 1430, 3: 2002, 5: 1638, 7: 910, 9: 350, 11: 90, 13: 14, 15: 1},
    16: {0: 1430, 2: 3432, 4: 3640, 6: 2548, 8: 1260, 10: 440, 12: 104, 14: 15, 16: 1},
}

# tilting multiplicities, char 0, l = 5
TILT_L5 = {
    0: {0: 1},
    1: {1: 1},
    2: {0: 1, 2: 1},
    3: {1: 2, 3: 1},
    4: {0: 2, 2: 3, 4: 1},
    5: {1: 5, 3: 3, 5: 1},
    6: {0: 5, 2: 8, 4: 5, 6: 1},
    7: {1: 13, 3: 8, 5: 5, 7: 1},
    8: {0: 13, 2: 21, 4: 20, 6: 7, 8: 1},
    9: {1: 34, 3: 21, 5: 27, 7: 8, 9: 1},
    10: {0: 34, 2: 55, 4: 75, 6: 35, 8: 8, 10: 1},
    11: {1: 89, 3: 55, 5: 110, 7: 43, 9: 10, 11: 1},
    12: {0: 89, 2: 144, 4: 275, 6: 153, 8: 43, 10: 11, 12: 1},
    13: {1: 233, 3: 144, 5: 428, 7: 196, 9: 65, 11: 12, 13: 1},
    14: {0: 233, 2: 377, 4: 1001, 6: 624, 8: 196, 10: 77, 12: 13, 14: 1},
    15: {1: 610, 3: 377, 5: 1625, 7: 820, 9: 450, 11: 90, 13: 13, 15: 1},
    16: {0: 610, 2: 987, 4: 3640, 6: 2445, 8: 820, 10: 440, 12: 103, 14: 15, 16: 1},
}

# tilting multiplicities, char 0, l = 3
TILT_L3 = {
    0: {0: 1},
    1: {1: 1},
    2: {0: 1, 2: 1},
    3: {1: 1, 3: 1},
    4: {0: 1, 2: 3, 4: 1},
    5: {1: 1, 3: 4, 5: 1},
    6: {0: 1, 2: 9, 4: 4, 6: 1},
    7: {1: 1, 3: 13, 5: 6, 7: 1},
    8: {0: 1, 2: 28, 4: 13, 6: 7, 8: 1},
    9: {1: 1, 3: 41, 5: 27, 7: 7, 9: 1},
    10: {0: 1, 2: 90, 4: 41, 6: 34, 8: 9, 10: 1},
    11: {1: 1, 3: 131, 5: 110, 7: 34, 9: 10, 11: 1},
    12: {0: 1, 2: 297, 4: 131, 6: 144, 8: 54, 10: 10, 12: 1},
    13: {1: 1, 3: 428, 5: 429, 7: 144, 9: 64, 11: 12, 13: 1},
    14: {0: 1, 2: 1001, 4: 428, 6: 573, 8: 273, 10: 64, 12: 13, 14: 1},
    15: {1: 1, 3: 1429, 5: 1638, 7: 573, 9: 337, 11: 90, 13: 13, 15: 1},
    16: {0: 1, 2: 3432, 4: 1429, 6: 2211, 8: 1260, 10: 337, 12: 103, 14: 15, 16: 1},
}

# tilting multiplicities, q = 1, p = 2, odd n
TILT_P2_ODD = {
    1: {1: 1},
    3: {1: 2, 3: 1},
    5: {1: 4, 3: 4, 5: 1},
    7: {1: 8, 3: 14, 5: 6, 7: 1},
    9: {1: 16, 3: 48, 5: 26, 7: 8, 9: 1},
    11: {1: 32, 3: 164, 5: 100, 7: 44, 9: 10, 11: 1},
    13: {1: 64, 3: 560, 5: 364, 7: 208, 9: 64, 11: 12, 13: 1},
    15: {1: 128, 3: 1912, 5: 1288, 7: 910, 9: 336, 11: 90, 13: 14, 15: 1},
    17: {1: 256, 3: 6528, 5: 4488, 7: 3808, 9: 1582, 11: 544, 13: 118, 15: 16, 17: 1},
    19: {1: 512, 3: 22288, 5: 15504, 7: 15504, 9: 6972, 11: 2906, 13: 780, 15: 152, 17: 18, 19: 1},
}

# tilting multiplicities, q = 1, p = 3
TILT_P3 = {
    0: {0: 1},
    1: {1: 1},
    2: {0: 1, 2: 1},
    3: {1: 1, 3: 1},
    4: {0: 1, 2: 3, 4: 1},
    5: {1: 1, 3: 4, 5: 1},
    6: {0: 1, 2: 9, 4: 4, 6: 1},
    7: {1: 1, 3: 13, 5: 6, 7: 1},
    8: {0: 1, 2: 28, 4: 13, 6: 7, 8: 1},
    9: {1: 1, 3: 41, 5: 27, 7: 7, 9: 1},
    10: {0: 1, 2: 90, 4: 41, 6: 34, 8: 9, 10: 1},
    11: {1: 1, 3: 131, 5: 109, 7: 34, 9: 10, 11: 1},
    12: {0: 1, 2: 297, 4: 131, 6: 143, 8: 54, 10: 10, 12: 1},
    13: {1: 1, 3: 428, 5: 417, 7: 143, 9: 64, 11: 12, 13: 1},
    14: {0: 1, 2: 1000, 4: 428, 6: 560, 8: 273, 10: 64, 12: 13, 14: 1},
    15: {1: 1, 3: 1428, 5: 1548, 7: 560, 9: 337, 11: 90, 13: 13, 15: 1},
    16: {0: 1, 2: 3417, 4: 1428, 6: 2108, 8: 1260, 10: 337, 12: 103, 14: 15, 16: 1},
}

# tilting multiplicities, l = 2, p = 3, odd n
TILT_L2_P3_ODD = {
    1: {1: 1},
    3: {1: 2, 3: 1},
    5: {1: 5, 3: 4, 5: 1},
    7: {1: 14, 3: 13, 5: 6, 7: 1},
    9: {1: 41, 3: 40, 5: 27, 7: 8, 9: 1},
    11: {1: 122, 3: 121, 5: 110, 7: 44, 9: 10, 11: 1},
    13: {1: 365, 3: 364, 5: 429, 7: 208, 9: 64, 11: 12, 13: 1},
    15: {1: 1094, 3: 1093, 5: 1638, 7: 909, 9: 336, 11: 90, 13: 14, 15: 1},
    17: {1: 3281, 3: 3280, 5: 6188, 7: 3792, 9: 1581, 11: 544, 13: 119, 15: 16, 17: 1},
    19: {1: 9842, 3: 9841, 5: 23256, 7: 15353, 9: 6954, 11: 2907, 13: 798, 15: 151, 17: 18, 19: 1},
}

# tilting multiplicities, l = 3, p = 2
TILT_L3_P2 = {
    0: {0: 1},
    1: {1: 1},
    2: {0: 1, 2: 1},
    3: {1: 1, 3: 1},
    4: {0: 1, 2: 3, 4: 1},
    5: {1: 1, 3: 4, 5: 1},
    6: {0: 1, 2: 9, 4: 4, 6: 1},
    7: {1: 1, 3: 13, 5: 6, 7: 1},
    8: {0: 1, 2: 27, 4: 13, 6: 7, 8: 1},
    9: {1: 1, 3: 40, 5: 27, 7: 7, 9: 1},
    10: {0: 1, 2: 81, 4: 40, 6: 34, 8: 9, 10: 1},
    11: {1: 1, 3: 121, 5: 110, 7: 34, 9: 10, 11: 1},
    12: {0: 1, 2: 243, 4: 121, 6: 144, 8: 54, 10: 10, 12: 1},
    13: {1: 1, 3: 364, 5: 429, 7: 144, 9: 64, 11: 12, 13: 1},
    14: {0: 1, 2: 729, 4: 364, 6: 573, 8: 272, 10: 64, 12: 13, 14: 1},
    15: {1: 1, 3: 1093, 5: 1638, 7: 573, 9: 336, 11: 90, 13: 13, 15: 1},
    16: {0: 1, 2: 2187, 4: 1093, 6: 2211, 8: 1245, 10: 336, 12: 103, 14: 15, 16: 1},
}

# cell dimensions of End(D(2)^n)
BMW_CELLS = {
    0: {0: 1},
    1: {2: 1},
    2: {0: 1, 2: 1, 4: 1},
    3: {0: 1, 2: 3, 4: 2, 6: 1},
    4: {0: 3, 2: 6, 4: 6, 6: 3, 8: 1},
    5: {0: 6, 2: 15, 4: 15, 6: 10, 8: 4, 10: 1},
    6: {0: 15, 2: 36, 4: 40, 6: 29, 8: 15, 10: 5, 12: 1},
    7: {0: 36, 2: 91, 4: 105, 6: 84, 8: 49, 10: 21, 12: 6, 14: 1},
    8: {0: 91, 2: 232, 4: 280, 6: 238, 8: 154, 10: 76, 12: 28, 14: 7, 16: 1},
    9: {0: 232, 2: 603, 4: 750, 6: 672, 8: 468, 10: 258, 12: 111, 14: 36, 16: 8, 18: 1},
    10: {0: 603, 2: 1585, 4: 2025, 6: 1890, 8: 1398, 10: 837, 12: 405, 14: 155, 16: 45, 18: 9, 20: 1},
}

# simple dimensions of End(D(2)^n), l = 5, char 0
BMW_SIMPLE_L5 = {
    0: {0: 1},
    1: {2: 1},
    2: {0: 1, 2: 1, 4: 1},
    3: {0: 1, 2: 2, 4: 2, 6: 1},
    4: {0: 2, 2: 3, 4: 6, 6: 3, 8: 1},
    5: {0: 3, 2: 5, 4: 15, 6: 10, 8: 3, 10: 1},
    6: {0: 5, 2: 8, 4: 40, 6: 28, 8: 10, 10: 5, 12: 1},
    7: {0: 8, 2: 13, 4: 105, 6: 78, 8: 28, 10: 21, 12: 6, 14: 1},
    8: {0: 13, 2: 21, 4: 280, 6: 211, 8: 78, 10: 76, 12: 28, 14: 7, 16: 1},
    9: {0: 21, 2: 34, 4: 750, 6: 569, 8: 211, 10: 257, 12: 103, 14: 36, 16: 8, 18: 1},
    10: {0: 34, 2: 55, 4: 2025, 6: 1530, 8: 569, 10: 829, 12: 360, 14: 155, 16: 45, 18: 8, 20: 1},
}

# simple dimensions of End(D(2)^n), l = 5, p = 2
BMW_SIMPLE_L5_P2 = {
    7: {0: 8, 2: 13, 4: 104, 6: 78, 8: 28, 10: 21, 12: 6, 14: 1},
    8: {0: 13, 2: 21, 4: 273, 6: 210, 8: 78, 10: 76, 12: 27, 14: 7, 16: 1},
    9: {0: 21, 2: 34, 4: 714, 6: 561, 8: 210, 10: 257, 12: 103, 14: 36, 16: 8, 18: 1},
    10: {0: 34, 2: 55, 4: 1870, 6: 1485, 8: 561, 10: 829, 12: 360, 14: 155, 16: 45, 18: 8, 20: 1},
}

# simple dimensions of End(D(2)^10), l = 5, p = 3, as printed
BMW_L5_P3_ROW10 = [32, 55, 2025, 1530, 571, 828, 360, 155, 45, 8, 1]

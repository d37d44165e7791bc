"""Reference sequences used as fixed targets."""

V_43 = [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 2, 3, 2, 2, 4, 2, 8, 3, 10, 2, 12, 2, 16, 3, 18, 2, 20, 2,
        24, 3, 26, 2, 28, 2, 32, 3, 34, 2, 36, 2, 40]
Y_43 = [1, 3, 4, 4, 6, 4, 6, 8, 10, 10, 12, 10, 15, 11, 19, 16, 19, 21, 17, 21, 19, 24, 19, 29, 17, 29,
        19, 32, 19, 37, 17, 37, 19, 40, 19, 45, 17, 45, 19, 48, 19, 53, 17]
C_43 = [1, 3, 4, 5, 6, 4, 6, 8, 10, 10, 13, 12, 17, 14, 21, 18, 23, 23, 25, 24, 29, 26, 31, 31, 33, 32,
        37, 34, 39, 39, 41, 40, 45, 42, 47, 47, 49, 48, 53, 50, 55, 55, 57]
C_PERIOD = (-3, 5, 0, 2, -1, 5)

FULL_COORD = [1, 7, 15, 24, 32, 40, 48, 56, 64, 72, 80, 88]
EDGE_COORD = [1, 5, 11, 16, 21, 27, 32, 37, 43, 48, 53]

"""Reference values frozen for comparison."""

# class count and M(W_p;x) of the caterpillars W_1 .. W_14
CATERPILLAR_TABLE = [
    (1, "1"),
    (1, "1"),
    (2, "x+1"),
    (3, "2x+1"),
    (7, "x^3+x^2+4x+1"),
    (10, "x^3+3x^2+5x+1"),
    (22, "3x^4+3x^3+8x^2+7x+1"),
    (32, "4x^4+6x^3+13x^2+8x+1"),
    (70, "x^6+6x^5+13x^4+16x^3+23x^2+10x+1"),
    (102, "x^6+10x^5+19x^4+29x^3+31x^2+11x+1"),
    (222, "5x^7+13x^6+39x^5+46x^4+59x^3+46x^2+13x+1"),
    (324, "6x^7+23x^6+58x^5+75x^4+90x^3+57x^2+14x+1"),
    (704, "x^9+15x^8+39x^7+97x^6+147x^5+158x^4+153x^3+77x^2+16x+1"),
    (1028, "x^9+21x^8+62x^7+155x^6+222x^5+248x^4+210x^3+91x^2+17x+1"),
]

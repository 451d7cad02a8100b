"""Reference values copied from the printed tables."""

# Both columns as printed for the 2^n * 5^3 doubling table.
TABLE_ONE = [
    ("4,10", "0;0,14,24"),
    ("8,20", "0;0,7,12"),
    ("16,40", "0;0,3,36"),
    ("33,20", "0;0,1,48"),
    ("1,6,40", "0;0,0,54"),
    ("2,13,20", "0;0,0,27"),
    ("4,26,40", "0;0,0,13,30"),
    ("8,53,20", "0;0,0,6,45"),
    ("17,46,40", "0;0,0,3,22,30"),
    ("35,33,20", "0;0,0,1,41,15"),
    ("1,11,6,40", "0;0,0,0,50,37,30"),
    ("2,22,13,20", "0;0,0,0,25,18,45"),
    ("4,44,26,40", "0;0,0,0,12,39,22,30"),
    ("9,28,53,20", "0;0,0,0,6,19,41,15"),
    ("18,57,46,40", "0;0,0,0,3,9,50,37,30"),
    ("37,55,33,20", "0;0,0,0,1,34,55,18,45"),
    ("1,15,51,6,40", "0;0,0,0,0,47,27,39,22,30"),
    ("2,31,42,13,20", "0;0,0,0,0,23,43,49,41,15"),
    ("5,3,24,26,40", "0;0,0,0,0,11,51,54,50,37,30"),
    ("10,6,48,53,20", "0;0,0,0,0,5,55,57,25,18,45"),
    ("20,13,37,46,40", "0;0,0,0,0,2,57,58,42,39,22,30"),
    ("40,27,15,33,20", "0;0,0,0,0,1,28,59,21,19,41,15"),
    ("1,20,54,31,6,40", "0;0,0,0,0,0,44,29,40,39,50,37,30"),
    ("2,41,49,2,13,20", "0;0,0,0,0,0,22,14,50,19,55,18,45"),
    ("5,23,38,4,26,40", "0;0,0,0,0,0,11,7,25,9,57,39,22,30"),
    ("10,47,16,8,53,20", "0;0,0,0,0,0,5,33,42,34,58,49,41,15"),
    ("21,34,32,17,46,40", "0;0,0,0,0,0,2,46,51,17,29,24,50,37,30"),
    ("43,9,4,35,33,20", "0;0,0,0,0,0,1,23,25,38,44,42,25,18,45"),
    ("1,26,18,9,11,6,40", "0;0,0,0,0,0,0,41,42,49,22,21,12,39,22,30"),
    ("2,52,36,18,22,13,20", "0;0,0,0,0,0,0,20,51,24,41,10,36,19,41,15"),
]

def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def identity2():
    m = [[0, 0], [0, 0]]
    if 0 == 0:
        m[0][0] = 1
    if 0 == 1:
        m[0][1] = 1
    if 1 == 0:
        m[1][0] = 1
    if 1 == 1:
        m[1][1] = 1
    return m

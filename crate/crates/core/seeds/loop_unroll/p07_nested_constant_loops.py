def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def identity2():
    m = [[0, 0], [0, 0]]
    for r in range(2):
        for c in range(2):
            if r == c:
                m[r][c] = 1
    return m
# probe: identity2()

def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def bits(n):
    out = []
    for b in range(16):
        out.append((n // 2 ** b) % 2)
    return sum(out)
# probe: bits(1000)

def stats(values):
    small = 0
    large = 0
    for v in values:
        if v >= 0:
            if v < 10:
                small += 1
        if v >= 10:
            if v < 100:
                large += 1
    return small, large
# probe: stats([1, 5, 15, 150, -2, 99])

def stats(values):
    small = 0
    large = 0
    for v in values:
        if v >= 0 and v < 10:
            small += 1
        if v >= 10 and v < 100:
            large += 1
    return small, large

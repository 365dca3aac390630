def loop_sum(values):
    s = 0
    for v in values:
        s += v
        if s > 10:
            pass
    return s

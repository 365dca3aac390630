def checkpoint(tag):
    pass

def loop_sum(values):
    s = 0
    for v in values:
        s += v
        if s > 10:
            checkpoint('big')
    return s
# probe: loop_sum([5, 6, 7])

def record(x):
    pass

def classify(values):
    out = []
    for v in values:
        if v > 0:
            record(v)
            out.append('pos')
        else:
            out.append('neg')
    return out
# probe: classify([1, -1])

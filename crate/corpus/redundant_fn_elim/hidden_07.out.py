def classify(values):
    out = []
    for v in values:
        if v > 0:
            out.append('pos')
        else:
            out.append('neg')
    return out

def signed(values):
    lowest = 4
    out = []
    for v in values:
        if v < lowest:
            out.append(-v)
        else:
            out.append(v)
    return out

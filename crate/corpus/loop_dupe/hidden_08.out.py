def evens(n):
    out = []
    for k in range(0, n, 2):
        out.append(k)
    for k in range(0, n, 2):
        out.append(k)
    return out
def odds(n):
    out = []
    for k in range(1, n, 2):
        out.append(k)
    for k in range(1, n, 2):
        out.append(k)
    return out

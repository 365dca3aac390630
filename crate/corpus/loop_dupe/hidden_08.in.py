def evens(n):
    out = []
    for k in range(0, n, 2):
        out.append(k)
    return out

def odds(n):
    out = []
    for k in range(1, n, 2):
        out.append(k)
    return out
# probe: evens(7)
# probe: odds(7)

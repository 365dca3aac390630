def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def table(n):
    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            row.append(r * c)
        rows.append(row)
    return rows
# probe: table(3)

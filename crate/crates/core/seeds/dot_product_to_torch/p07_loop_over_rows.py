def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def matvec(rows, x):
    out = []
    for r in rows:
        s = 0
        for i in range(len(r)):
            s += r[i] * x[i]
        out.append(s)
    return out

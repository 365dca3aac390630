import torch
def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def matvec(rows, x):
    out = []
    for r in rows:
        s = torch.dot(r, x)
        out.append(s)
    return out

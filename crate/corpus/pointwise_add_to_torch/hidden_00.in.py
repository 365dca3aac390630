def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def triple_sum(a, b, c):
    ab = [0] * len(a)
    for i in range(len(a)):
        ab[i] = a[i] + b[i]
    abc = [0] * len(ab)
    for i in range(len(ab)):
        abc[i] = ab[i] + c[i]
    return abc

def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def running_total(values):
    total = 0
    out = []
    for v in values:
        total = total + v + 0
        out.append(total)
    return out

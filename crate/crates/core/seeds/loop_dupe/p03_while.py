def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def countdown(n):
    steps = []
    while n > 0:
        steps.append(n)
        n -= 1
    return steps
# probe: countdown(3)

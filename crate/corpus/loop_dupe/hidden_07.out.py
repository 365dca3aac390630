def pick_larger(a, b):
    if a >= b:
        return a
    return b
def print_table(rows):
    for name, value in rows:
        print(name, value)
    for name, value in rows:
        print(name, value)
    return None

def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def circle(r):
    pi = 3.14159
    tau = 6.28318
    return pi * r * r
# probe: circle(2)

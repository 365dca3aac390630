def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

base = 7
offset = base + 0
limit = offset * 3
items = [limit - 0, offset, base]
print(items)

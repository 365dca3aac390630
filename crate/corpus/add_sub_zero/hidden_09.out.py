def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
base = 7
offset = base
limit = offset * 3
items = [limit, offset, base]
print(items)

def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

temperature = 31
humid = True
message = 'fine'
if temperature > 30:
    if humid:
        message = 'muggy'
print(message)

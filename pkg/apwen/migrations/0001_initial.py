# Generated by Django 5.2.6

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Certificate',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('pattern', models.CharField(db_index=True, max_length=64)),
                ('d', models.PositiveIntegerField()),
                ('verdict', models.CharField(choices=[('APWENIAN', 'Apwenian'), ('NOT_APWENIAN', 'Not Apwenian'), ('INCONCLUSIVE', 'Inconclusive')], max_length=20)),
                ('witness', models.PositiveIntegerField(blank=True, null=True)),
                ('n_valid', models.PositiveIntegerField(blank=True, null=True)),
                ('closure_size', models.PositiveIntegerField(blank=True, null=True)),
                ('fast_path', models.BooleanField(default=False)),
                ('document', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
    ]
